"""
CLI Request Module
Lagroot - Certified Polynomial Root Finding

Validated request model and the command dispatcher. run() never raises:
every outcome is an exit code plus a payload for stdout, and failures carry
a machine-readable error object.
"""

import json
from typing import Any, Dict, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from ..arithmetic import format_gaussian, format_rational
from ..locator import filtered_candidates
from ..polynomials import (Poly, cauchy_bounds, format_coefficients_json, format_poly,
                           parse_coefficients_json, parse_poly, separation_exponent,
                           square_free_decompose)
from ..rootfinder import RootFinder, render_text
from ..utils.config import get_config
from ..utils.errors import (InvariantViolation, LagrootError, ParseError, PrecisionCapError,
                            PreconditionError, RootSelectionError)
from ..utils.logging import get_logger


logger = get_logger(__name__)

Command = Literal['roots', 'digits', 'factor', 'bounds', 'candidates']


class CliRequest(BaseModel):
    """One command invocation."""

    model_config = ConfigDict(extra='forbid', frozen=True)

    command: Command
    polynomial: Optional[str] = None
    coeffs: Optional[str] = None
    t: Optional[int] = Field(default=None, ge=1)
    k: Optional[int] = Field(default=None, ge=1)
    k_to: Optional[int] = Field(default=None, ge=1)
    root: Optional[int] = Field(default=None, ge=0)
    factor_index: Optional[int] = Field(default=None, ge=0)
    format: Literal['json', 'text'] = 'json'
    debug_web: bool = False

    @model_validator(mode='after')
    def _single_source(self) -> "CliRequest":
        if (self.polynomial is None) == (self.coeffs is None):
            raise ValueError("give exactly one of a polynomial expression or --coeffs")
        return self

    def parse(self) -> Poly:
        if self.coeffs is not None:
            return parse_coefficients_json(self.coeffs)
        return parse_poly(self.polynomial)


def _schema() -> str:
    return str(get_config().cli.get('schema', 'lagroot/1'))


def _require(value: Optional[int], flag: str, command: str) -> int:
    if value is None:
        raise PreconditionError(f"{command} needs {flag}")
    return value


def _check_cap(value: int, flag: str) -> None:
    cap = int(get_config().cli.get('max_precision', 1 << 20))
    if value > cap:
        raise PrecisionCapError(f"{flag} = {value} exceeds the cap {cap}")


def _roots(request: CliRequest, f: Poly) -> str:
    t = _require(request.t, '--t', 'roots')
    _check_cap(t, '--t')
    report = RootFinder(f).report(t)
    return render_text(report) if request.format == 'text' else report.to_json()


def _digits(request: CliRequest, f: Poly) -> str:
    root = _require(request.root, '--root', 'digits')
    k = _require(request.k, '--k', 'digits')
    k_to = request.k_to if request.k_to is not None else k
    _check_cap(k_to, '--k-to')
    if k_to < k:
        raise PreconditionError("--k-to must not be below --k")
    bits = RootFinder(f).bits(root, k, k_to)
    text = "".join(str(b) for b in bits)
    if request.format == 'text':
        return text
    payload: Dict[str, Any] = {"schema": _schema(), "root": root, "k": k}
    if request.k_to is None:
        payload["bit"] = bits[0]
    else:
        payload.update({"k_to": k_to, "bits": text})
    return json.dumps(payload, indent=2)


def _factor(request: CliRequest, f: Poly) -> str:
    decomposition = square_free_decompose(f)
    if request.format == 'text':
        lines = [f"unit: {format_gaussian(decomposition.unit)}"]
        lines += [f"{multiplicity}  {format_poly(factor)}" for factor, multiplicity in decomposition.factors]
        return "\n".join(lines)
    payload = {
        "schema": _schema(),
        "unit": format_gaussian(decomposition.unit),
        "factors": [
            {"poly": format_poly(factor), "coeffs": json.loads(format_coefficients_json(factor)),
             "multiplicity": multiplicity}
            for factor, multiplicity in decomposition.factors
        ],
    }
    return json.dumps(payload, indent=2)


def _bounds(request: CliRequest, f: Poly) -> str:
    if f.is_constant():
        # no roots, so every bound is vacuous
        if request.format == 'text':
            return f"degree: {f.degree}\nno roots"
        payload = {
            "schema": _schema(),
            "degree": f.degree,
            "cauchy_lo": None,
            "cauchy_hi": None,
            "separation_exponent": None,
            "separation_bound": None,
        }
        return json.dumps(payload, indent=2)
    lo, hi = cauchy_bounds(f)
    exponent = separation_exponent(f, f)
    if request.format == 'text':
        return f"cauchy_lo: {format_rational(lo)}\ncauchy_hi: {format_rational(hi)}\nseparation: 2^-{exponent}"
    payload = {
        "schema": _schema(),
        "degree": f.degree,
        "cauchy_lo": format_rational(lo),
        "cauchy_hi": format_rational(hi),
        "separation_exponent": exponent,
        "separation_bound": f"1/{1 << exponent}",
    }
    return json.dumps(payload, indent=2)


def _candidates(request: CliRequest, f: Poly) -> str:
    t = _require(request.t, '--t', 'candidates')
    _check_cap(t, '--t')
    if request.factor_index is not None:
        factors = square_free_decompose(f).factors
        if request.factor_index >= len(factors):
            raise RootSelectionError(f"factor index {request.factor_index} out of range 0..{len(factors) - 1}")
        f = factors[request.factor_index][0]
    candidates = filtered_candidates(f, t, debug=request.debug_web)
    items = [format_gaussian(z) for z in candidates.items]
    if request.format == 'text':
        return "\n".join(list(candidates.trace) + items)
    payload: Dict[str, Any] = {
        "schema": _schema(),
        "epsilon": format_rational(candidates.epsilon),
        "items": items,
    }
    if request.debug_web:
        payload["trace"] = list(candidates.trace)
    return json.dumps(payload, indent=2)


_HANDLERS = {
    'roots': _roots,
    'digits': _digits,
    'factor': _factor,
    'bounds': _bounds,
    'candidates': _candidates,
}


def error_payload(error: LagrootError) -> str:
    return json.dumps({"schema": _schema(), **error.to_dict()}, indent=2)


def build_request(**fields: Any) -> CliRequest:
    """
    Raises:
        ParseError: if the fields do not form a valid request
    """
    try:
        return CliRequest(**fields)
    except ValidationError as exc:
        raise ParseError(f"invalid request: {exc.errors()[0]['msg']}") from exc


def run(request: CliRequest) -> Tuple[int, str]:
    """Execute a request; returns (exit code, stdout payload)."""
    try:
        f = request.parse()
        if request.command != 'bounds' and f.is_constant():
            raise PreconditionError("a nonconstant polynomial is required")
        logger.info(f"{request.command}: {format_poly(f)}")
        return 0, _HANDLERS[request.command](request, f)
    except LagrootError as exc:
        logger.error(f"{request.command} failed: {exc}")
        return exc.exit_code, error_payload(exc)
    except Exception as exc:
        logger.exception(f"{request.command} crashed")
        breach = InvariantViolation(f"{type(exc).__name__}: {exc}")
        return breach.exit_code, error_payload(breach)
