import sys, os
sys.path.insert(0, "/root/pkg/src")
from gcan.config import TrainConfig
from gcan.train import train
from gcan.evaluate import evaluate

root = "/root/pkg/.probe"
mode = sys.argv[1]
cfg = TrainConfig(mode=mode, iterations=20000, mask_mode="peak_one", lr=0.003,
                  lr_decay_points=(12000, 16000), lr_decay_factors=(0.1, 0.1),
                  conv_channels=(6, 14, 28), hidden_size=48, attn_size=32, embed_size=24,
                  gen_scale_min=1.3, gen_scale_max=1.7, gen_gap_min=2, gen_gap_max=2,
                  gen_curvature=False,
                  train_data=os.path.join(root, "tr_cap"), test_data=os.path.join(root, "te_cap"),
                  out_dir=os.path.join(root, f"final_{mode.replace('+', '_')}"), log_every=100)
res = train(cfg)
rep, _ = evaluate(res.ckpt_path, cfg.test_data, mode, model_cfg=cfg.model_config())
print(f"FINAL {mode}: acc={rep.accuracy:.4f} train_s={res.seconds:.0f} "
      f"ent_raw={rep.mean_entropy_raw:.3f} ent_ref={rep.mean_entropy_refined:.3f} "
      f"sharper={rep.refined_sharper_fraction}", flush=True)
print("PERLEN", [(l, n, round(r, 3)) for l, n, e, r in rep.per_length], flush=True)
