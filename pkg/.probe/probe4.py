import sys, os
sys.path.insert(0, "/root/pkg/src")
from gcan.config import TrainConfig
from gcan.data import GenConfig, generate_dataset, dataset_write
from gcan.train import train
from gcan.evaluate import evaluate

root = "/root/pkg/.probe"
tag = sys.argv[1]
gen = GenConfig(scale_min=float(sys.argv[2]), scale_max=float(sys.argv[3]),
                gap_min=int(sys.argv[4]), gap_max=int(sys.argv[5]),
                wobble=int(sys.argv[6]), curvature=sys.argv[7] == "1")
iters = int(sys.argv[8]); mode = sys.argv[9]
tr, te = os.path.join(root, f"tr_{tag}"), os.path.join(root, f"te_{tag}")
if not os.path.isdir(tr):
    dataset_write(tr, generate_dataset(1000, 2000, gen))
    dataset_write(te, generate_dataset(2000, 500, gen))
cfg = TrainConfig(mode=mode, iterations=iters, mask_mode="peak_one", lr=0.003,
                  lr_decay_points=(int(iters*0.88), int(iters*0.96)), lr_decay_factors=(0.3, 0.3),
                  conv_channels=(6,12,24), hidden_size=48, attn_size=32, embed_size=24,
                  train_data=tr, test_data=te, out_dir=os.path.join(root, f"run_{tag}_{mode}"), log_every=100)
res = train(cfg)
rep, _ = evaluate(res.ckpt_path, te, mode, model_cfg=cfg.model_config())
print(f"PROBE4 {tag} {mode}: acc={rep.accuracy:.4f} sharper={rep.refined_sharper_fraction}", flush=True)
print("PERLEN", [(l, n, round(r, 3)) for l, n, e, r in rep.per_length], flush=True)
