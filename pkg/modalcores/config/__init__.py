"""Typed settings for the command line and for config files.

Settings are defined as methods decorated with ``MyProperty``. The method returns the default value (it can
use other settings, so defaults can be dynamic), its return annotation is validated with typeguard whenever
new value is set and its docstring is used as CLI help.

Examples:
=========

    >>> from typing import Optional
    >>> from typing_extensions import Literal
    ...
    >>> class Settings(Config):
    ...     @MyProperty
    ...     def beta_mode(self) -> Literal["practical", "theoretical", "custom"]:
    ...         '''How beta is computed.'''
    ...         return "practical"
    ...
    ...     @MyProperty
    ...     def k(self) -> Optional[int]:
    ...         '''Neighbor count. None means default from sample size.'''
    ...         return None
    ...
    >>> settings = Settings(k=30)
    >>> settings.k
    30
    >>> settings.beta_mode = "other"
    Traceback (most recent call last):
    TypeError: ...

Settings can be loaded from a key=value file (``settings.do.from_file(path)``) and from argparse
(``settings.do.add_arguments(parser)`` and ``settings.do.update_from_namespace(namespace)``). Explicit
flags win over config file and config file wins over defaults.

Copy is deep copy.

>>> settings_copy = settings.do.copy()
>>> settings_copy.k = 10
>>> settings.k
30
"""
from __future__ import annotations

from modalcores.config.config_internal import Config, ConfigDo, str_to_infer_type
from modalcores.config.property_internal import MyProperty, MyPropertyClass

__all__ = ["Config", "ConfigDo", "MyProperty", "MyPropertyClass", "str_to_infer_type"]
