"""Ensemble configuration files.

INI-style text read with :mod:`configparser`::

    [ensemble]
    q = 3
    spectrum = weight          ; weight | map-ss | bd-ss

    [cn 1]
    family = spc:7             ; or: hamming74
    h = 6
    gamma = 0.722

    [cn 2]
    coeffs = 0:1,2:5,4:7,6:3  ; enumerator literal ...
    length = 7                 ; ... with its code length
    gamma = 0.278

    [cn 3]
    generator = hamming74.txt  ; path relative to this file

Each ``[cn <label>]`` section gives exactly one of ``family``, ``coeffs`` or
``generator``, and exactly one of ``gamma`` or ``rho`` (the same choice for
every section). Fractions may be written as ratios such as ``13/18``.
"""

from __future__ import annotations

import configparser
import re
from fractions import Fraction
from pathlib import Path

from gldpc_spectrum.ensemble import SPECTRUM_KINDS, CNType, Ensemble
from gldpc_spectrum.enumerators import Enumerator, hamming74, spc
from gldpc_spectrum.errors import BudgetError, ConfigError
from gldpc_spectrum.gf2codes import hamming74_generator, read_matrix, spc_generator

_SECTION_RE = re.compile(r"^cn\s+(\S+)$")
_CN_KEYS = {"label", "family", "coeffs", "length", "generator", "h", "gamma", "rho"}


class _Locator:
    """Maps (section, key) back to a line number for error messages."""

    def __init__(self, path: Path, text: str):
        self.path = path
        self.lines = text.splitlines()

    def where(self, section: str | None = None, key: str | None = None) -> str:
        current = None
        for i, raw in enumerate(self.lines, start=1):
            line = raw.strip()
            if line.startswith("[") and line.endswith("]"):
                current = line[1:-1].strip()
                if section == current and key is None:
                    return f"{self.path}:{i}"
            elif current == section and key is not None:
                name = re.split(r"[=:]", line, maxsplit=1)[0].strip().lower()
                if name == key:
                    return f"{self.path}:{i}"
        return str(self.path)

    def error(self, msg: str, section: str | None = None, key: str | None = None) -> ConfigError:
        loc = self.where(section, key)
        label = f"[{section}]" if section else ""
        if key:
            label += f" {key}"
        return ConfigError(f"{loc}: {label.strip()}: {msg}" if label else f"{loc}: {msg}")


def _number(text: str) -> float:
    return float(Fraction(text.strip()))


def _int(loc: _Locator, sec: str, key: str, text: str) -> int:
    try:
        return int(text.strip())
    except ValueError:
        raise loc.error(f"expected an integer, got {text!r}", sec, key) from None


def _family(loc: _Locator, sec: str, text: str) -> tuple[Enumerator, object, int]:
    name = text.strip().lower()
    if name == "hamming74":
        return hamming74(), hamming74_generator(), 4
    if name.startswith("spc:"):
        s = _int(loc, sec, "family", name[4:])
        try:
            return spc(s), spc_generator(s), s - 1
        except ValueError as exc:
            raise loc.error(str(exc), sec, "family") from None
    raise loc.error(f"unknown family {text!r}; expected spc:<s> or hamming74", sec, "family")


def _cn_type(loc: _Locator, sec: str, body: configparser.SectionProxy, base: Path) -> CNType:
    unknown = set(body) - _CN_KEYS
    if unknown:
        key = sorted(unknown)[0]
        raise loc.error(f"unknown key (allowed: {', '.join(sorted(_CN_KEYS))})", sec, key)
    label = body.get("label", _SECTION_RE.match(sec).group(1)).strip()

    sources = [k for k in ("family", "coeffs", "generator") if k in body]
    if len(sources) != 1:
        raise loc.error("give exactly one of family, coeffs or generator", sec)
    fracs = [k for k in ("gamma", "rho") if k in body]
    if len(fracs) != 1:
        raise loc.error("give exactly one of gamma or rho", sec)

    kwargs: dict = {}
    try:
        kwargs[fracs[0]] = _number(body[fracs[0]])
    except (ValueError, ZeroDivisionError):
        raise loc.error(f"expected a number, got {body[fracs[0]]!r}", sec, fracs[0]) from None
    if "h" in body:
        kwargs["h"] = _int(loc, sec, "h", body["h"])

    src = sources[0]
    try:
        if src == "family":
            wef, gen, h = _family(loc, sec, body["family"])
            kwargs.setdefault("h", h)
            return CNType(label, wef, generator=gen, **kwargs)
        if src == "coeffs":
            if "length" not in body:
                raise loc.error("coeffs needs a length key", sec, "coeffs")
            length = _int(loc, sec, "length", body["length"])
            try:
                wef = Enumerator.parse(body["coeffs"], length)
            except (ValueError, TypeError) as exc:
                raise loc.error(str(exc), sec, "coeffs") from None
            total = wef.total()
            if "h" not in kwargs and total & (total - 1) == 0:
                kwargs["h"] = total.bit_length() - 1
            return CNType(label, wef, **kwargs)
        path = base / body["generator"].strip()
        try:
            gen = read_matrix(path)
        except OSError as exc:
            raise loc.error(f"cannot read generator file: {exc}", sec, "generator") from None
        except ValueError as exc:
            raise loc.error(f"{path}: {exc}", sec, "generator") from None
        return CNType.from_generator(label, gen, **kwargs)
    except BudgetError:
        raise
    except ConfigError:
        raise
    except ValueError as exc:
        raise loc.error(str(exc), sec) from None


def load_config(path: str | Path, spectrum: str | None = None) -> Ensemble:
    """Read an ensemble config; ``spectrum`` overrides the file's mode."""
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ConfigError(f"{path}: cannot read config: {exc}") from None
    loc = _Locator(path, text)
    parser = configparser.ConfigParser(inline_comment_prefixes=(";", "#"), interpolation=None)
    try:
        parser.read_string(text, source=str(path))
    except configparser.Error as exc:
        raise ConfigError(f"{path}: {exc}") from None

    if not parser.has_section("ensemble"):
        raise loc.error("missing [ensemble] section")
    ens = parser["ensemble"]
    if "q" not in ens:
        raise loc.error("missing key", "ensemble", "q")
    q = _int(loc, "ensemble", "q", ens["q"])
    kind = (spectrum or ens.get("spectrum", "weight")).strip()
    if kind not in SPECTRUM_KINDS:
        raise loc.error(f"unknown spectrum {kind!r}; expected one of {', '.join(SPECTRUM_KINDS)}", "ensemble", "spectrum")

    types = []
    for sec in parser.sections():
        if sec == "ensemble":
            continue
        if not _SECTION_RE.match(sec):
            raise loc.error("unknown section; expected [ensemble] or [cn <label>]", sec)
        types.append(_cn_type(loc, sec, parser[sec], path.parent))
    if not types:
        raise loc.error("no [cn <label>] sections")

    try:
        return Ensemble.build(q, types, kind)
    except BudgetError:
        raise
    except ValueError as exc:
        raise loc.error(str(exc)) from None
