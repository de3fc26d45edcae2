"""
Configuration: parameter defaults, numerical settings and the named
parameter sets (profiles) shipped in `profiles.yaml`, optionally merged
with a user file and with `key=value` assignments from the command line.
"""

import dataclasses
import logging
import typing as tp
from pathlib import Path

import toolz
import yaml

from zerocount.constants import QuadratureSpec
from zerocount.regions import BoundParams, LineBound
from zerocount.types import PathLike, ValidationError
from zerocount.utils import parse_number

PROFILES_PATH = Path(__file__).with_name("profiles.yaml")
SECTIONS = ("params", "quadrature", "optimize", "profiles")
PARAM_FIELDS = tuple(f.name for f in dataclasses.fields(BoundParams))
LINE_FIELDS = tuple(f.name for f in dataclasses.fields(LineBound))
INT_FIELDS = (
    "n",
    "J1",
    "J2",
    "max_subdivisions",
    "order",
    "seed",
    "budget",
    "restarts",
)


def deep_merge(*dicts: tp.Mapping) -> tp.Dict:
    """Merges mappings left to right, recursing into values that are mappings."""

    def combine(values: tp.List[tp.Any]) -> tp.Any:
        if all(isinstance(v, tp.Mapping) for v in values):
            return deep_merge(*values)
        return values[-1]

    return toolz.merge_with(combine, *dicts)


def parse_assignment(text: str) -> tp.Dict[str, tp.Any]:
    """
    Turns `"a.b=value"` into `{"a": {"b": value}}`, reading `value` as YAML.

    ```python
    parse_assignment("line_half.t_power=27/164")
    # {"line_half": {"t_power": "27/164"}}
    ```
    """
    if "=" not in text:
        raise ValidationError(f"expected key=value, got {text!r}")

    key, value = text.split("=", 1)
    path = [part.strip() for part in key.split(".")]

    if not all(path):
        raise ValidationError(f"invalid key in {text!r}")

    try:
        parsed = yaml.safe_load(value)
    except yaml.YAMLError as e:
        raise ValidationError(f"invalid value in {text!r}: {e}")

    return toolz.assoc_in({}, path, parsed)


def _number(key: str, value: tp.Any) -> tp.Union[int, float]:
    try:
        number = parse_number(value)
    except ValueError as e:
        raise ValidationError(f"{key}: {e}")

    if key in INT_FIELDS:
        if number != int(number):
            raise ValidationError(f"{key} must be an integer, got {value!r}")
        return int(number)

    return number


def _line_bound(key: str, raw: tp.Any) -> LineBound:
    if not isinstance(raw, tp.Mapping):
        raise ValidationError(f"{key} must be a mapping with keys {LINE_FIELDS}")

    unknown = sorted(set(raw) - set(LINE_FIELDS))
    if unknown:
        raise ValidationError(f"unknown keys {unknown} in {key}")

    return LineBound(**{k: _number(f"{key}.{k}", v) for k, v in raw.items()})


def build_params(raw: tp.Mapping[str, tp.Any]) -> BoundParams:
    """
    Builds `BoundParams` from a mapping of its fields with YAML friendly
    values (fractions as strings, line bounds as nested mappings).

    Raises:
        ValidationError: for unknown, missing or malformed fields.
        ConstraintViolation: if the values violate the parameter constraints.
    """
    unknown = sorted(set(raw) - set(PARAM_FIELDS))
    if unknown:
        raise ValidationError(f"unknown parameters {unknown}")

    missing = [k for k in ("c", "r", "eta") if k not in raw]
    if missing:
        raise ValidationError(f"missing parameters {missing}")

    kwargs: tp.Dict[str, tp.Any] = {}

    for key, value in raw.items():
        if key in ("line1", "line_half"):
            kwargs[key] = _line_bound(key, value)
        elif key == "Q":
            if not isinstance(value, (list, tuple)):
                raise ValidationError(f"Q must be a list, got {value!r}")
            kwargs[key] = tuple(_number(f"Q[{i}]", q) for i, q in enumerate(value))
        else:
            kwargs[key] = _number(key, value)

    return BoundParams(**kwargs)


@dataclasses.dataclass(frozen=True)
class Config:
    """
    Merged configuration.

    Arguments:
        params: defaults shared by every profile.
        profiles: named parameter sets, merged over `params`.
        quadrature: keyword arguments of `QuadratureSpec`.
        optimize: defaults of the optimizer (`seed`, `budget`, `restarts`).
        overrides: assignments from the command line, merged over every
            profile.
    """

    params: tp.Mapping[str, tp.Any]
    profiles: tp.Mapping[str, tp.Mapping[str, tp.Any]]
    quadrature: tp.Mapping[str, tp.Any]
    optimize: tp.Mapping[str, tp.Any]
    overrides: tp.Mapping[str, tp.Any] = dataclasses.field(default_factory=dict)

    @property
    def profile_names(self) -> tp.List[str]:
        return sorted(self.profiles)

    def raw_params(self, profile: tp.Optional[str] = None) -> tp.Dict[str, tp.Any]:
        if profile is None:
            return deep_merge(self.params, self.overrides)

        if profile not in self.profiles:
            available = ", ".join(self.profile_names)
            raise ValidationError(
                f"unknown profile {profile!r}, available: {available}"
            )

        return deep_merge(self.params, self.profiles[profile], self.overrides)

    def bound_params(self, profile: tp.Optional[str] = None) -> BoundParams:
        """The validated parameters of `profile`, or of the defaults and overrides."""
        return build_params(self.raw_params(profile))

    def quadrature_spec(self, workers: int = 1) -> QuadratureSpec:
        kwargs = {k: _number(k, v) for k, v in self.quadrature.items()}
        return QuadratureSpec(**toolz.merge(kwargs, {"workers": workers}))

    def optimize_defaults(self) -> tp.Dict[str, int]:
        return {k: _number(k, v) for k, v in self.optimize.items()}

    def validate(self):
        for name in self.profile_names:
            self.bound_params(name)

        self.quadrature_spec()
        self.optimize_defaults()


def _read_yaml(path: PathLike) -> tp.Dict[str, tp.Any]:
    try:
        with open(path, "r", encoding="utf-8") as f:
            data = yaml.safe_load(f) or {}
    except OSError as e:
        raise ValidationError(f"cannot read config {path}: {e}")
    except yaml.YAMLError as e:
        raise ValidationError(f"invalid YAML in {path}: {e}")

    if not isinstance(data, tp.Mapping):
        raise ValidationError(f"config {path} must be a mapping")

    unknown = sorted(set(data) - set(SECTIONS))
    if unknown:
        raise ValidationError(f"unknown sections {unknown} in {path}")

    return data


def load_config(
    path: tp.Optional[PathLike] = None, assignments: tp.Sequence[str] = ()
) -> Config:
    """
    Loads the packaged profiles, merges the optional user file over them and
    applies the `key=value` assignments.

    Assignments whose key starts with `quadrature.` or `optimize.` set that
    section; `params.` is optional for parameter fields. Every profile is
    validated before the config is returned.

    Arguments:
        path: optional user config with the same schema as `profiles.yaml`.
        assignments: strings such as `"c=1.0434"`, `"line_half.t_power=27/164"`
            or `"quadrature.abs_tol=1e-10"`.

    Raises:
        ValidationError: for unreadable files, unknown keys or malformed values.
        ConstraintViolation: for parameter values outside the constraints.
    """
    data = _read_yaml(PROFILES_PATH)

    if path is not None:
        data = deep_merge(data, _read_yaml(path))
        logging.info("merged config %s", path)

    overrides: tp.Dict[str, tp.Any] = {}

    for text in assignments:
        update = parse_assignment(text)
        (section,) = update.keys()

        if section in ("quadrature", "optimize"):
            data = deep_merge(data, update)
        elif section == "params":
            overrides = deep_merge(overrides, update["params"])
        elif section == "profiles":
            raise ValidationError("profiles cannot be set from the command line")
        else:
            overrides = deep_merge(overrides, update)

    config = Config(
        params=data.get("params", {}),
        profiles=data.get("profiles", {}),
        quadrature=data.get("quadrature", {}),
        optimize=data.get("optimize", {}),
        overrides=overrides,
    )
    config.validate()

    return config
