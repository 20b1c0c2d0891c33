import numpy as np

_MASK = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


def _mix_scalar(z: int) -> int:
    z = (z ^ (z >> 30)) * _MIX1 & _MASK
    z = (z ^ (z >> 27)) * _MIX2 & _MASK
    return z ^ (z >> 31)


def counter_uniforms(seed: int, ordinals: np.ndarray) -> np.ndarray:
    """
    Uniformes em [0, 1) derivados só de (seed, ordinal), no estilo SplitMix64

    A decisão de cada instância não depende de quais outras instâncias existem
    nem da ordem em que são percorridas.

    Args:
        seed: Semente (>= 0)
        ordinals: Identificadores ordinais das instâncias

    Returns:
        np.ndarray: Um uniforme por ordinal
    """
    if seed < 0:
        raise ValueError(f"seed deve ser >= 0, recebeu {seed}")
    key = np.uint64(_mix_scalar((seed * _GOLDEN + 1) & _MASK))
    z = np.asarray(ordinals, dtype=np.int64).astype(np.uint64)
    z = z * np.uint64(_GOLDEN) + key
    z = (z ^ (z >> np.uint64(30))) * np.uint64(_MIX1)
    z = (z ^ (z >> np.uint64(27))) * np.uint64(_MIX2)
    z = z ^ (z >> np.uint64(31))
    return (z >> np.uint64(11)).astype(np.float64) * (1.0 / (1 << 53))
