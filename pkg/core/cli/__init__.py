"""
ViesPy CLI
Front-end de linha de comando: generate -> sample -> train -> predict/evaluate -> verify-oracle
"""

from typing import List, Optional

from pydantic import ValidationError

from core.console import console
from core.errors import UsageError, ViesPyError
from .commands import COMMANDS
from .guards import USAGE_EXIT, CommandGuard, default_guards
from .hooks import CommandHook, HookChain, TimingHook
from .parser import build_parser

DATA_EXIT = 1


def run(argv: Optional[List[str]] = None, guards: Optional[CommandGuard] = None,
        hooks: Optional[HookChain] = None) -> int:
    """
    Executa um subcomando e devolve o código de saída

    Args:
        argv: Argumentos (sem o nome do programa)
        guards: Validação de flags (padrão: default_guards())
        hooks: Cadeia de hooks (padrão: TimingHook)

    Returns:
        int: 0 sucesso, 1 erro de dados/domínio, 2 erro de uso
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    console.set_level(args.log_level)
    guards = guards or default_guards()
    if hooks is None:
        hooks = HookChain()
        hooks.register_hook(TimingHook())

    verdict = guards.check_guards(args.command, args)
    if not verdict.allowed:
        console.error(f"{args.command}: {verdict.message}")
        return verdict.exit_code

    hooks.execute_before(args.command, args)
    try:
        exit_code = COMMANDS[args.command](args)
    except UsageError as e:
        console.error(f"{args.command}: {e}")
        exit_code = USAGE_EXIT
    except ValidationError as e:
        console.error(f"{args.command}: parâmetros inválidos: {e.errors()[0]['msg']}")
        exit_code = USAGE_EXIT
    except (ViesPyError, OSError) as e:
        console.error(f"{args.command}: {e}")
        exit_code = DATA_EXIT
    hooks.execute_after(args.command, args, exit_code)
    return exit_code


__all__ = [
    'run',
    'build_parser',
    'CommandGuard',
    'default_guards',
    'CommandHook',
    'HookChain',
    'TimingHook',
]
