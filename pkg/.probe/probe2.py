import sys, time, os
sys.path.insert(0, "/root/pkg/src")
from gcan.config import TrainConfig
from gcan.train import train
from gcan.evaluate import evaluate

root = "/root/pkg/.probe"
tr, te = os.path.join(root, "train"), os.path.join(root, "test")
mode, mask, lr, iters, tag = sys.argv[1], sys.argv[2], float(sys.argv[3]), int(sys.argv[4]), sys.argv[5]
cfg = TrainConfig(mode=mode, iterations=iters, mask_mode=mask, lr=lr,
                  lr_decay_points=(int(iters*0.6), int(iters*0.8)), lr_decay_factors=(0.1, 0.1),
                  conv_channels=(6,12,24), hidden_size=48, attn_size=32, embed_size=24,
                  train_data=tr, test_data=te, out_dir=os.path.join(root, tag), log_every=100)
res = train(cfg)
rep, _ = evaluate(res.ckpt_path, te, mode, model_cfg=cfg.model_config())
print(f"PROBE2 {tag}: mode={mode} mask={mask} lr={lr} iters={iters} acc={rep.accuracy:.4f} "
      f"train_s={res.seconds:.0f} ent_raw={rep.mean_entropy_raw:.3f} ent_ref={rep.mean_entropy_refined:.3f} "
      f"sharper={rep.refined_sharper_fraction:.3f} recog_final={res.final_loss.recog:.4f} att_final={res.final_loss.att:.5f}", flush=True)
