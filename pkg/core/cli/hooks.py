import time
from abc import ABC, abstractmethod
from argparse import Namespace
from typing import Any, Dict, List, Optional

from core.console import console


class CommandHook(ABC):
    """
    Classe base para hooks executados em volta de cada subcomando
    Define a interface padrão que todos os hooks devem implementar
    """

    def __init__(self, name: str, priority: int = 50):
        self.name = name
        self.priority = priority
        self.enabled = True

    @abstractmethod
    def before_command(self, command: str, args: Namespace) -> Optional[Dict[str, Any]]:
        """
        Executado antes do subcomando

        Args:
            command: Nome do subcomando
            args: Flags já validadas

        Returns:
            Dict opcional com dados para o contexto da execução
        """
        pass

    @abstractmethod
    def after_command(self, command: str, args: Namespace, exit_code: int) -> Optional[Dict[str, Any]]:
        """
        Executado após o subcomando (também quando ele falha)

        Args:
            command: Nome do subcomando
            args: Flags
            exit_code: Código de saída produzido
        """
        pass

    def __str__(self):
        return f"Hook({self.name}, priority={self.priority}, enabled={self.enabled})"


class TimingHook(CommandHook):
    """
    Hook de logging e desempenho
    Registra início e fim de cada subcomando e acumula métricas por comando
    """

    def __init__(self):
        super().__init__("timing", priority=1)
        self.start_times: Dict[str, float] = {}
        self.metrics: Dict[str, Dict[str, float]] = {}

    def before_command(self, command: str, args: Namespace) -> Optional[Dict[str, Any]]:
        self.start_times[command] = time.time()
        console.info(f"▶️ {command}")
        console.details("Flags", {"command": command, "args": vars(args)})
        return {"timing": {"start_time": self.start_times[command]}}

    def after_command(self, command: str, args: Namespace, exit_code: int) -> Optional[Dict[str, Any]]:
        end_time = time.time()
        start_time = self.start_times.pop(command, end_time)
        processing_time = (end_time - start_time) * 1000

        if processing_time < 1000:
            perf_emoji = "⚡"
        elif processing_time < 10000:
            perf_emoji = "✅"
        else:
            perf_emoji = "🐌"
        status = "ok" if exit_code == 0 else f"código {exit_code}"
        console.info(f"⏱️ {command} terminou em {round(processing_time, 2)}ms {perf_emoji} ({status})")

        self._record(command, processing_time)
        return {"performance": {"processing_time_ms": round(processing_time, 2)}}

    def _record(self, command: str, processing_time: float):
        metrics = self.metrics.setdefault(command, {
            "count": 0, "total_time": 0.0, "min_time": float("inf"), "max_time": 0.0,
        })
        metrics["count"] += 1
        metrics["total_time"] += processing_time
        metrics["min_time"] = min(metrics["min_time"], processing_time)
        metrics["max_time"] = max(metrics["max_time"], processing_time)
        console.details("Métricas", {"command": command, **metrics})

    def get_performance_report(self) -> Dict:
        return {
            command: {
                "runs": data["count"],
                "avg_time_ms": round(data["total_time"] / data["count"], 2),
                "min_time_ms": round(data["min_time"], 2),
                "max_time_ms": round(data["max_time"], 2),
            }
            for command, data in self.metrics.items()
        }


class HookChain:
    """
    Cadeia de hooks ordenada por prioridade (menor = primeiro)
    Falhas dentro de um hook são registradas e não interrompem o subcomando
    """

    def __init__(self):
        self.hooks: Dict[str, CommandHook] = {}
        self.execution_order: List[str] = []

    def register_hook(self, hook: CommandHook):
        self.hooks[hook.name] = hook
        self.execution_order = sorted(self.hooks, key=lambda name: self.hooks[name].priority)
        console.debug(f"🔧 Hook '{hook.name}' registrado (prioridade: {hook.priority})")

    def execute_before(self, command: str, args: Namespace) -> Dict[str, Any]:
        context: Dict[str, Any] = {}
        for name in self.execution_order:
            hook = self.hooks[name]
            if not hook.enabled:
                continue
            try:
                result = hook.before_command(command, args)
                if result:
                    context.update(result)
            except Exception as e:
                console.warning(f"Erro no hook {name} (before): {str(e)}")
        return context

    def execute_after(self, command: str, args: Namespace, exit_code: int) -> Dict[str, Any]:
        context: Dict[str, Any] = {}
        for name in reversed(self.execution_order):
            hook = self.hooks[name]
            if not hook.enabled:
                continue
            try:
                result = hook.after_command(command, args, exit_code)
                if result:
                    context.update(result)
            except Exception as e:
                console.warning(f"Erro no hook {name} (after): {str(e)}")
        return context
