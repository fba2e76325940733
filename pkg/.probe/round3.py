import sys, os
sys.path.insert(0, "/root/pkg/src")
from gcan.config import TrainConfig
from gcan.data import GenConfig, generate_dataset, dataset_write
from gcan.train import train
from gcan.evaluate import evaluate

root = "/root/pkg/.probe"
mask = sys.argv[1]
mode = sys.argv[2]
iters = int(sys.argv[3]) if len(sys.argv) > 3 else 20000
gen = GenConfig(scale_min=1.4, scale_max=1.6, gap_min=2, gap_max=2,
                wobble=1, curvature=False, noise=0.0)
tr, te = os.path.join(root, "tr_r3"), os.path.join(root, "te_r3")
if not os.path.isdir(tr):
    dataset_write(tr, generate_dataset(1000, 2000, gen))
    dataset_write(te, generate_dataset(2000, 500, gen))
cfg = TrainConfig(mode=mode, iterations=iters, mask_mode=mask, lr=0.003,
                  lr_decay_points=(int(iters * 0.6), int(iters * 0.8)),
                  lr_decay_factors=(0.1, 0.1),
                  conv_channels=(6, 14, 28), hidden_size=48, attn_size=32, embed_size=24,
                  gen_scale_min=1.4, gen_scale_max=1.6, gen_gap_min=2, gen_gap_max=2,
                  gen_wobble=1, gen_curvature=False, gen_noise=0.0,
                  train_data=tr, test_data=te,
                  out_dir=os.path.join(root, f"r3_{mask}_{mode.replace('+', '_')}_{iters}"),
                  log_every=100)
res = train(cfg)
rep, _ = evaluate(res.ckpt_path, te, mode, model_cfg=cfg.model_config())
print(f"ROUND3 {mask} {mode} {iters}: acc={rep.accuracy:.4f} train_s={res.seconds:.0f} "
      f"ent_raw={rep.mean_entropy_raw:.3f} ent_ref={rep.mean_entropy_refined:.3f} "
      f"sharper={rep.refined_sharper_fraction}", flush=True)
print("PERLEN", [(l, n, round(r, 3)) for l, n, e, r in rep.per_length], flush=True)
