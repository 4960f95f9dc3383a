"""Module with MyProperty descriptor for 'config' subpackage."""

from __future__ import annotations
from typing import Any, Callable, Generic, Optional, Type, TypeVar, Union, overload
import inspect
import typing

from typeguard import check_type
from typing_extensions import Literal, get_args, get_origin

T = TypeVar("T")
U = TypeVar("U")


def get_return_type_hints(func: Callable) -> Any:
    """Return evaluated return annotation of a function or None if there is none.

    Example:
        >>> def literal_return() -> Literal["practical", "theoretical"]:
        ...     return "practical"
        >>> "Literal" in str(get_return_type_hints(literal_return))
        True
    """
    if isinstance(func, staticmethod):
        func = func.__func__

    try:
        return typing.get_type_hints(func).get("return")
    except Exception:  # pylint: disable=broad-except
        return func.__annotations__.get("return")


def accepts_str(allowed_type: Any) -> bool:
    """Whether a string is a valid value for the annotation (str, Optional[str] or Literal of strings)."""
    if allowed_type is str:
        return True
    if get_origin(allowed_type) is Literal:
        return any(isinstance(i, str) for i in get_args(allowed_type))
    if get_origin(allowed_type) is Union:
        return any(accepts_str(i) for i in get_args(allowed_type))
    return False


def _accepts_float(allowed_type: Any) -> bool:
    if allowed_type is float:
        return True
    return get_origin(allowed_type) is Union and float in get_args(allowed_type)


# Needs to inherit from property to be able to use help tooltip
class MyPropertyClass(property, Generic[T]):
    """Typed setting with dynamic default.

    The decorated method returns the default, its return annotation is the allowed type and its docstring is
    used as a help in CLI.
    """

    # Property is inherited just for formatting help in IDE, so not called from init
    def __init__(  # pylint: disable=super-init-not-called
        self, fget: Callable[..., T], doc: Optional[str] = None
    ):
        """Init property."""
        self.allowed_types = get_return_type_hints(fget)
        self.init_function = fget
        self.__doc__ = doc or inspect.getdoc(fget)
        self.public_name = ""
        self.private_name = ""

    def __set_name__(self, _, name):
        """Define names. Private is with underscore."""
        self.public_name = name
        self.private_name = "_" + name

    @overload
    def __get__(self, used_object: None, objtype: Any = None) -> MyPropertyClass[T]:
        ...

    @overload
    def __get__(self, used_object: U, objtype: Type[U] = None) -> T:
        ...

    def __get__(self, used_object, objtype=None):
        """Return stored value or evaluate the default. If used on class, descriptor itself is returned."""
        if used_object is None:
            return self

        content = getattr(used_object, self.private_name)

        if callable(content):
            return content(used_object)

        return content

    def __set__(self, used_object, content: T | Callable[..., T]):
        """Validate new value against the return annotation and store it."""
        result = content(used_object) if callable(content) else content

        # Numeric tower, int is fine where float is expected
        if isinstance(result, int) and not isinstance(result, bool) and _accepts_float(self.allowed_types):
            result = float(result)

        if self.allowed_types is not None:
            check_type(argname=self.public_name, value=result, expected_type=self.allowed_types)

        object.__setattr__(used_object, self.private_name, result)


def MyProperty(f: Callable[..., T]) -> MyPropertyClass[T]:  # pylint: disable=invalid-name
    """Wrap MyPropertyClass so IDE does not complain about missing setter.

    Args:
        f (Callable[..., T]): Decorated method returning the default value.
    """
    return MyPropertyClass[T](f)
