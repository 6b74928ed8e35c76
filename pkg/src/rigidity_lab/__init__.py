from .cli import main, run_command
from .rigidity_lab import RigidityLab

__all__ = [
    'RigidityLab',
    'main',
    'run_command',
]
