#!/usr/bin/env python3
"""
ViesPy - Correção de Viés Amostral para Aprendizado Supervisionado
Entrada principal da linha de comando (generate, sample, train, predict, evaluate, verify-oracle)
"""

import sys

from core.cli import run


def main():
    """Função principal (SÍNCRONA)"""
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
