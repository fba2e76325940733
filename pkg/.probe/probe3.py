import sys, time, os
sys.path.insert(0, "/root/pkg/src")
from gcan.config import TrainConfig
from gcan.data import GenConfig, generate_dataset, dataset_write
from gcan.train import train
from gcan.evaluate import evaluate

root = "/root/pkg/.probe"
smin, smax = float(sys.argv[4]), float(sys.argv[5])
tr = os.path.join(root, f"train_s{smin}_{smax}")
te = os.path.join(root, f"test_s{smin}_{smax}")
gen = GenConfig(scale_min=smin, scale_max=smax)
if not os.path.isdir(tr):
    dataset_write(tr, generate_dataset(1000, 2000, gen))
    dataset_write(te, generate_dataset(2000, 500, gen))
mode, mask, lr, iters, tag = sys.argv[1], sys.argv[2], float(sys.argv[3]), int(sys.argv[6]), sys.argv[7]
cfg = TrainConfig(mode=mode, iterations=iters, mask_mode=mask, lr=lr,
                  gen_scale_min=smin, gen_scale_max=smax,
                  lr_decay_points=(int(iters*0.6), int(iters*0.8)), lr_decay_factors=(0.1, 0.1),
                  conv_channels=(6,12,24), hidden_size=48, attn_size=32, embed_size=24,
                  train_data=tr, test_data=te, out_dir=os.path.join(root, tag), log_every=100)
res = train(cfg)
rep, _ = evaluate(res.ckpt_path, te, mode, model_cfg=cfg.model_config())
print(f"PROBE3 {tag}: mode={mode} scale=({smin},{smax}) acc={rep.accuracy:.4f} train_s={res.seconds:.0f} "
      f"ent_raw={rep.mean_entropy_raw:.3f} ent_ref={rep.mean_entropy_refined:.3f} "
      f"sharper={rep.refined_sharper_fraction:.3f}", flush=True)
print("PERLEN", [(l, n, round(r, 3)) for l, n, e, r in rep.per_length], flush=True)
