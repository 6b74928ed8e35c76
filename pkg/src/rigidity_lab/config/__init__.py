from .default_settings import DEFAULT_SETTINGS, LabSettings

__all__ = [
    'DEFAULT_SETTINGS',
    'LabSettings',
]
