"""Run the lozenge tool with python -m lozenge."""

from .cli import main

main()
