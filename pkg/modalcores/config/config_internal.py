"""Module with functions for 'config' subpackage."""

from __future__ import annotations
from typing import Any, Generic, TypeVar
from copy import deepcopy
import argparse
import ast

from typing_extensions import Literal, get_args, get_origin

from ..errors import InvalidConfigError
from ..paths import PathLike, validate_path
from .property_internal import MyPropertyClass, accepts_str

ConfigType = TypeVar("ConfigType", bound="Config")


def str_to_infer_type(string_var: str) -> Any:
    """Convert string to python literal (int, float, bool, None, list...).

    Examples:
        >>> type(str_to_infer_type("1"))
        <class 'int'>
        >>> type(str_to_infer_type("0.05"))
        <class 'float'>
        >>> str_to_infer_type("None") is None
        True
    """
    return ast.literal_eval(string_var)


class ConfigDo(Generic[ConfigType]):
    """Helpers of a config, separated so config namespace contains just settings."""

    def __init__(self, config: ConfigType) -> None:
        self.config: ConfigType = config

    def copy(self) -> ConfigType:
        """Create deep copy of config.

        Returns:
            ConfigType: Deep copy.
        """
        return deepcopy(self.config)

    def update(self, content: dict) -> None:
        """Bulk update with dict values.

        Args:
            content (dict): E.g {"k": 30}

        Raises:
            AttributeError: If some setting not found in config.
            InvalidConfigError: If value has wrong type.
        """
        for i, j in content.items():
            try:
                setattr(self.config, i, j)
            except TypeError as err:
                raise InvalidConfigError(f"Setting '{i}' can not be {j!r}. {err}") from err

    def get_dict(self) -> dict:
        """Get flat dictionary with current values (dynamic defaults evaluated)."""
        return {i: getattr(self.config, i) for i in self.config.option_names}

    def parse_value(self, name: str, value: str) -> Any:
        """Convert string from CLI or config file to the type of setting ``name``."""
        allowed_type = type(self.config)[name].allowed_types

        try:
            return str_to_infer_type(value)
        except (ValueError, SyntaxError) as err:
            if accepts_str(allowed_type):
                return value
            raise InvalidConfigError(f"Value '{value}' of setting '{name}' is not valid.") from err

    def from_file(self, path: PathLike) -> None:
        """Update config from key=value file. Empty lines and lines starting with # are skipped.

        Args:
            path (PathLike): Path to the config file.

        Raises:
            FileNotFoundError: If there is no file.
            InvalidConfigError: If line is not key=value or key is not a setting.
        """
        path = validate_path(path, error_prefix="Config file not found")
        content = {}

        for line_number, line in enumerate(path.read_text(encoding="utf-8").splitlines(), start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise InvalidConfigError(
                    f"Line {line_number} of config file {path} is not in key=value form."
                )

            key, value = (i.strip() for i in line.split("=", 1))
            key = key.replace("-", "_")

            if key not in self.config.option_names:
                raise InvalidConfigError(
                    f"Unknown setting '{key}' on line {line_number} of {path}. "
                    f"Possible settings are {list(self.config.option_names)}."
                )
            content[key] = self.parse_value(key, value)

        self.update(content)

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        """Add one ``--dashed-name`` flag per setting. Docstring of setting is used as help.

        Flags default to None so only explicitly used flags overwrite the config.
        """
        for name in self.config.option_names:
            setting = type(self.config)[name]
            flag = "--" + name.replace("_", "-")
            help_str = (setting.__doc__ or "").split("\n\n")[0]

            if setting.allowed_types is bool:
                parser.add_argument(flag, dest=name, action="store_true", default=None, help=help_str)
            elif get_origin(setting.allowed_types) is Literal:
                choices = list(get_args(setting.allowed_types))
                parser.add_argument(flag, dest=name, default=None, choices=choices, help=help_str)
            else:
                parser.add_argument(flag, dest=name, default=None, metavar=name.upper(), help=help_str)

    def update_from_namespace(self, namespace: argparse.Namespace) -> None:
        """Update config with flags that were used on command line."""
        content = {}

        for name in self.config.option_names:
            value = getattr(namespace, name, None)
            if value is None:
                continue
            if isinstance(value, str):
                value = self.parse_value(name, value)
            content[name] = value

        self.update(content)


class Config:
    """Base of typed settings. Subclass it and define settings with ``MyProperty``.

    Example:
        >>> from modalcores.config import MyProperty
        >>> class Settings(Config):
        ...     @MyProperty
        ...     def k(self) -> int:
        ...         '''Neighbor count.'''
        ...         return 10
        ...
        ...     @MyProperty
        ...     def beta(self) -> float:
        ...         return 2 / self.k ** 0.5
        >>> settings = Settings()
        >>> settings.beta
        0.632...
        >>> settings.k = 4
        >>> settings.beta
        1.0
        >>> settings.k = "many"
        Traceback (most recent call last):
        TypeError: ...
        >>> settings.not_existing = 1
        Traceback (most recent call last):
        AttributeError: ...
        >>> settings.do.get_dict()
        {'k': 4, 'beta': 1.0}
    """

    option_names: tuple = ()

    def __init_subclass__(cls, **kwargs) -> None:
        super().__init_subclass__(**kwargs)
        names = []
        for klass in reversed(cls.__mro__):
            for name, attribute in vars(klass).items():
                if isinstance(attribute, MyPropertyClass) and name not in names:
                    names.append(name)
        cls.option_names = tuple(names)

    def __new__(cls, *args, **kwargs):
        """Just control that class is subclassed and not instantiated."""
        if cls is Config:
            raise TypeError("Config is not supposed to be instantiated only to be subclassed.")
        return object.__new__(cls)

    def __init__(self, **values) -> None:
        object.__setattr__(self, "do", ConfigDo(self))

        for name in self.option_names:
            object.__setattr__(self, "_" + name, type(self)[name].init_function)

        self.do.update(values)

    def __class_getitem__(cls, key):
        """To be able to access settings descriptors on class, e.g. ``FitConfig["k"]``."""
        return vars_lookup(cls, key)

    def __deepcopy__(self, memo):
        """Provide copy functionality."""
        cls = self.__class__
        result = cls.__new__(cls)
        memo[id(self)] = result
        for i, j in self.__dict__.items():
            object.__setattr__(result, i, deepcopy(j, memo))
        return result

    def __setattr__(self, name: str, value: Any) -> None:
        """Config is frozen, only defined settings can be set."""
        if name not in self.option_names:
            raise AttributeError(
                f"Object {type(self).__name__} is frozen. New attributes cannot be set and setting '{name}' "
                f"not found. Maybe you misspelled name. Possible settings are {list(self.option_names)}."
            )
        object.__setattr__(self, name, value)

    def __getitem__(self, key):
        """To be able to be able to use same syntax as if using dictionary."""
        return getattr(self, key)

    def __setitem__(self, key, value):
        """To be able to be able to use same syntax as if using dictionary."""
        setattr(self, key, value)


def vars_lookup(cls: type, key: str) -> MyPropertyClass:
    """Find the setting descriptor in class hierarchy."""
    for klass in cls.__mro__:
        if key in vars(klass) and isinstance(vars(klass)[key], MyPropertyClass):
            return vars(klass)[key]
    raise KeyError(f"Setting '{key}' not found in {cls.__name__}.")
