from argparse import Namespace

import numpy as np

from core.console import console
from core.data_io import (
    companion_path,
    read_dataset,
    read_model_document,
    read_sampling_manifest,
    read_truth_manifest,
    write_dataset,
    write_manifest,
    write_model,
)
from core.datagen import GenSpec, TruthManifest, generate
from core.evaluation import ReportRenderer, evaluate
from core.logistic import TrainConfig, predict_many, train
from core.model import SamplingSpec, TabulatedPredictor, corrected_probs, monte_carlo_label_frequencies
from core.sampling import downsample

ORACLE_Z_LIMIT = 5.0

renderer = ReportRenderer()


def cmd_generate(args: Namespace) -> int:
    spec = GenSpec(
        n=args.n,
        feature_count=args.features,
        true_intercept=args.intercept,
        true_weights=args.weights,
        seed=args.seed,
    )
    data = generate(spec)
    write_dataset(data, args.out)
    truth_path = companion_path(args.out, "truth")
    write_manifest(TruthManifest.from_spec(spec), truth_path)
    console.info(f"📂 Dataset em {args.out}, verdade em {truth_path}")
    return 0


def cmd_sample(args: Namespace) -> int:
    data = read_dataset(args.input)
    spec = SamplingSpec.per_instance() if args.per_instance else SamplingSpec.constant([args.s0, args.s1])
    sampled, manifest = downsample(data, spec, args.seed)
    write_dataset(sampled, args.out)
    manifest_path = companion_path(args.out, "sampling")
    write_manifest(manifest, manifest_path)
    print(f"mantidas {manifest.retained_count} de {manifest.original_count} "
          f"(por rótulo: {', '.join(str(c) for c in manifest.per_label_retained)})")
    console.info(f"📂 Amostra em {args.out}, manifesto em {manifest_path}")
    return 0


def _training_spec(args: Namespace) -> SamplingSpec:
    if args.manifest:
        return read_sampling_manifest(args.manifest).spec.to_spec()
    if args.per_instance:
        return SamplingSpec.per_instance()
    if args.s0 is not None:
        return SamplingSpec.constant([args.s0, args.s1])
    return SamplingSpec.constant([1.0, 1.0])


def cmd_train(args: Namespace) -> int:
    data = read_dataset(args.input)
    spec = _training_spec(args)
    config = TrainConfig(lam=args.lambda_, learning_rate=args.lr, max_iters=args.max_iters, grad_tol=args.tol)
    report = train(data, spec, config)
    write_model(report.model, args.out_model, lam=config.lam, train_s_r_mode=spec.mode)
    print(renderer.render("train.txt.j2", {"report": report}), end="")
    console.info(f"📂 Modelo em {args.out_model}")
    return 0


def cmd_predict(args: Namespace) -> int:
    model = read_model_document(args.model).to_model()
    data = read_dataset(args.input)
    probs = predict_many(model, data.features, args.deploy_ratio)
    write_dataset(data, args.out, extra_columns={"p": probs})
    console.info(f"📂 Previsões em {args.out} (razão de implantação {args.deploy_ratio})")
    return 0


def cmd_evaluate(args: Namespace) -> int:
    model = read_model_document(args.model).to_model()
    data = read_dataset(args.input)
    truth = read_truth_manifest(args.truth_manifest) if args.truth_manifest else None
    report = evaluate(model, data, truth)
    print(renderer.render("evaluate.txt.j2", {"report": report}), end="")
    return 0


def cmd_verify_oracle(args: Namespace) -> int:
    rng = np.random.default_rng(args.seed)
    f = rng.uniform(0.1, 1.0, size=args.labels)
    rates = rng.uniform(0.05, 1.0, size=args.labels)
    pred = TabulatedPredictor(f)
    spec = SamplingSpec.constant(rates)
    x = np.zeros(0)

    closed_form = corrected_probs(pred, spec, x)
    estimates = monte_carlo_label_frequencies(pred, spec, x, args.trials, rng)
    rows = [
        {
            "label": e.label,
            "f": f[e.label],
            "s": rates[e.label],
            "closed_form": closed_form[e.label],
            "estimate": e.estimate,
            "standard_error": e.standard_error,
            "z": e.z_score(closed_form[e.label]),
        }
        for e in estimates
    ]
    max_abs_z = max(abs(row["z"]) for row in rows)
    print(renderer.render("oracle.txt.j2", {
        "k": args.labels, "trials": args.trials, "seed": args.seed,
        "rows": rows, "max_abs_z": max_abs_z, "threshold": ORACLE_Z_LIMIT,
    }), end="")
    if max_abs_z > ORACLE_Z_LIMIT:
        console.error(f"Oráculo discorda da fórmula fechada: max |z| = {max_abs_z:.3f} > {ORACLE_Z_LIMIT}")
        return 1
    console.info("✅ Fórmula fechada confirmada pelo processo gerativo")
    return 0


COMMANDS = {
    "generate": cmd_generate,
    "sample": cmd_sample,
    "train": cmd_train,
    "predict": cmd_predict,
    "evaluate": cmd_evaluate,
    "verify-oracle": cmd_verify_oracle,
}
