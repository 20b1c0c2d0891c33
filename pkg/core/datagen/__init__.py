"""
ViesPy Datagen
Gerador sintético com parâmetros verdadeiros conhecidos
"""

from .generator import GenSpec, TruthManifest, generate
from .scenarios import lion_scenario

__all__ = [
    'GenSpec',
    'TruthManifest',
    'generate',
    'lion_scenario',
]
