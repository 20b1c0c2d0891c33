import argparse
from typing import List

from core.console import LEVELS


def _float_list(text: str) -> List[float]:
    if not text.strip():
        return []
    try:
        return [float(part) for part in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"lista de reais separados por vírgula inválida: {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    """Monta o parser com todos os subcomandos do pipeline"""
    parser = argparse.ArgumentParser(
        prog="viespy",
        description="ViesPy - correção de viés amostral para regressão logística",
    )
    parser.add_argument("--log-level", default="INFO", choices=list(LEVELS), help="Nível de log no stderr")
    commands = parser.add_subparsers(dest="command", required=True)

    generate = commands.add_parser("generate", help="Gera dataset sintético com verdade conhecida")
    generate.add_argument("--n", type=int, required=True, help="Número de instâncias")
    generate.add_argument("--features", type=int, required=True, help="Número de features |F|")
    generate.add_argument("--intercept", type=float, default=0.0, help="Intercepto verdadeiro c*")
    generate.add_argument("--weights", type=_float_list, default=[], help="Pesos verdadeiros w* (ex.: 1.0,-0.5)")
    generate.add_argument("--seed", type=int, default=0, help="Semente")
    generate.add_argument("--out", required=True, help="CSV de saída (manifesto em <nome>.truth.json)")

    sample = commands.add_parser("sample", help="Subamostra um dataset e grava o manifesto")
    sample.add_argument("--in", dest="input", required=True, help="CSV de entrada")
    sample.add_argument("--s0", type=float, help="Taxa de inclusão para y = 0")
    sample.add_argument("--s1", type=float, help="Taxa de inclusão para y = 1")
    sample.add_argument("--per-instance", action="store_true", help="Usa as colunas s0/s1 do dataset")
    sample.add_argument("--seed", type=int, default=0, help="Semente")
    sample.add_argument("--out", required=True, help="CSV de saída (manifesto em <nome>.manifest.json)")

    train = commands.add_parser("train", help="Treina a regressão logística corrigida")
    train.add_argument("--in", dest="input", required=True, help="CSV de treino")
    train.add_argument("--s0", type=float, help="Taxa usada para y = 0 (padrão 1)")
    train.add_argument("--s1", type=float, help="Taxa usada para y = 1 (padrão 1)")
    train.add_argument("--per-instance", action="store_true", help="Usa as colunas s0/s1 do dataset")
    train.add_argument("--manifest", help="Manifesto de amostragem com as taxas")
    train.add_argument("--lambda", dest="lambda_", type=float, default=0.0, help="Precisão L2 λ dos pesos")
    train.add_argument("--lr", type=float, default=1.0, help="Taxa de aprendizado (passo inicial)")
    train.add_argument("--max-iters", type=int, default=10_000, help="Máximo de iterações")
    train.add_argument("--tol", type=float, default=1e-8, help="Tolerância da norma máxima do gradiente")
    train.add_argument("--out-model", required=True, help="JSON do modelo")

    predict = commands.add_parser("predict", help="Anexa a probabilidade prevista (coluna p)")
    predict.add_argument("--model", required=True, help="JSON do modelo")
    predict.add_argument("--in", dest="input", required=True, help="CSV de entrada")
    predict.add_argument("--deploy-ratio", type=float, default=1.0, help="s_r de implantação (1 = população original)")
    predict.add_argument("--out", required=True, help="CSV de saída")

    evaluate = commands.add_parser("evaluate", help="Calibração, NLL médio e erro de parâmetros")
    evaluate.add_argument("--model", required=True, help="JSON do modelo")
    evaluate.add_argument("--in", dest="input", required=True, help="CSV de avaliação (sem viés)")
    evaluate.add_argument("--truth-manifest", help="Manifesto de verdade do gerador")

    oracle = commands.add_parser("verify-oracle", help="Compara a fórmula fechada com o processo gerativo")
    oracle.add_argument("--labels", type=int, default=3, help="Número de rótulos K")
    oracle.add_argument("--trials", type=int, default=1_000_000, help="Ensaios Monte-Carlo")
    oracle.add_argument("--seed", type=int, default=0, help="Semente")

    return parser
