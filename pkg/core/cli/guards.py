from abc import ABC, abstractmethod
from argparse import Namespace
from dataclasses import dataclass
from typing import Dict, List, Optional

from core.console import console

USAGE_EXIT = 2


@dataclass(frozen=True)
class GuardResult:
    allowed: bool
    message: str = ""
    exit_code: int = 0


ALLOWED = GuardResult(True)


def _deny(message: str) -> GuardResult:
    return GuardResult(False, message, USAGE_EXIT)


class BaseGuard(ABC):
    """
    Classe base para guards de validação de flags
    Todo guard roda antes de qualquer trabalho do subcomando
    """

    def __init__(self, name: str):
        self.name = name

    @abstractmethod
    def check(self, args: Namespace) -> GuardResult:
        """
        Verifica se a combinação de flags é válida

        Returns:
            GuardResult: allowed, message, exit_code
        """
        pass


class RateGuard(BaseGuard):
    """--s0/--s1 em [0, 1], informados juntos, e exclusivos com --per-instance/--manifest"""

    def __init__(self, require_rates: bool = False):
        super().__init__("rates")
        self.require_rates = require_rates

    def check(self, args: Namespace) -> GuardResult:
        s0, s1 = getattr(args, "s0", None), getattr(args, "s1", None)
        per_instance = getattr(args, "per_instance", False)
        manifest = getattr(args, "manifest", None)

        if (s0 is None) != (s1 is None):
            return _deny("Informe --s0 e --s1 juntos")
        sources = sum([s0 is not None, bool(per_instance), manifest is not None])
        if sources > 1:
            return _deny("Use apenas uma fonte de taxas: --s0/--s1, --per-instance ou --manifest")
        if self.require_rates and sources == 0:
            return _deny("Informe --s0 e --s1 (ou --per-instance)")
        for flag, value in (("--s0", s0), ("--s1", s1)):
            if value is not None and not 0.0 <= value <= 1.0:
                return _deny(f"{flag} deve estar em [0, 1], recebeu {value}")
        return ALLOWED


class RangeGuard(BaseGuard):
    """Limites numéricos por flag: (atributo, mínimo, inclusivo)"""

    def __init__(self, limits: List[tuple]):
        super().__init__("ranges")
        self.limits = limits

    def check(self, args: Namespace) -> GuardResult:
        for attribute, minimum, inclusive in self.limits:
            value = getattr(args, attribute, None)
            if value is None:
                continue
            ok = value >= minimum if inclusive else value > minimum
            if not ok:
                flag = "--" + attribute.rstrip("_").replace("_", "-")
                relation = ">=" if inclusive else ">"
                return _deny(f"{flag} deve ser {relation} {minimum}, recebeu {value}")
        return ALLOWED


class WeightsGuard(BaseGuard):
    """--weights precisa ter exatamente --features valores"""

    def __init__(self):
        super().__init__("weights")

    def check(self, args: Namespace) -> GuardResult:
        if len(args.weights) != args.features:
            return _deny(f"--weights tem {len(args.weights)} valores para --features {args.features}")
        return ALLOWED


class CommandGuard:
    """
    Gerenciador de guards por subcomando
    """

    def __init__(self):
        self.guards: Dict[str, List[BaseGuard]] = {}

    def register_guard(self, command: str, guard: BaseGuard):
        self.guards.setdefault(command, []).append(guard)
        console.debug(f"🛡️ Guard '{guard.name}' registrado para {command}")

    def check_guards(self, command: str, args: Namespace) -> GuardResult:
        """Devolve o primeiro resultado negado, ou ALLOWED"""
        for guard in self.guards.get(command, []):
            result = guard.check(args)
            if not result.allowed:
                return result
        return ALLOWED


def default_guards() -> CommandGuard:
    guards = CommandGuard()
    seed = ("seed", 0, True)
    guards.register_guard("generate", RangeGuard([("n", 1, True), ("features", 0, True), seed]))
    guards.register_guard("generate", WeightsGuard())
    guards.register_guard("sample", RateGuard(require_rates=True))
    guards.register_guard("sample", RangeGuard([seed]))
    guards.register_guard("train", RateGuard())
    guards.register_guard("train", RangeGuard([
        ("lambda_", 0.0, True), ("lr", 0.0, False), ("max_iters", 1, True), ("tol", 0.0, False),
    ]))
    guards.register_guard("predict", RangeGuard([("deploy_ratio", 0.0, False)]))
    guards.register_guard("verify-oracle", RangeGuard([("labels", 2, True), ("trials", 1, True), seed]))
    return guards
