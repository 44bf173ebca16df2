from .runner import run, main

__all__ = ["run", "main"]
