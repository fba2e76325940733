import sys, time, os
sys.path.insert(0, "/root/pkg/src")
from gcan.config import TrainConfig
from gcan.data import GenConfig, generate_dataset, dataset_write
from gcan.train import train
from gcan.evaluate import evaluate

root = "/root/pkg/.probe"
tr, te = os.path.join(root, "train"), os.path.join(root, "test")
if not os.path.isdir(tr):
    dataset_write(tr, generate_dataset(1000, 2000, GenConfig()))
    dataset_write(te, generate_dataset(2000, 500, GenConfig()))

mode = sys.argv[1]
hid = int(sys.argv[2]); attn = int(sys.argv[3]); iters = int(sys.argv[4])
cfg = TrainConfig(mode=mode, iterations=iters,
                  lr_decay_points=(int(iters*0.6), int(iters*0.8)), lr_decay_factors=(0.1, 0.1),
                  conv_channels=(6,12,24), hidden_size=hid, attn_size=attn, embed_size=24,
                  train_data=tr, test_data=te, out_dir=os.path.join(root, f"{mode}_{hid}"), log_every=100)
t0 = time.perf_counter()
res = train(cfg)
rep, _ = evaluate(res.ckpt_path, te, mode)
print(f"PROBE {mode} hid={hid} attn={attn} iters={iters}: acc={rep.accuracy:.4f} "
      f"train_s={res.seconds:.0f} ent_raw={rep.mean_entropy_raw:.3f} ent_ref={rep.mean_entropy_refined:.3f} "
      f"sharper={rep.refined_sharper_fraction:.3f} final={res.final_loss.total:.4f}", flush=True)
