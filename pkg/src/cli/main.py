"""
Command Line Interface
Lagroot - Certified Polynomial Root Finding

Usage:
    python -m src.cli roots "x^2 - 2" --t 20 --format json
    python -m src.cli digits "x^2 - 2" --root 1 --k 3
    python -m src.cli factor "x^3 - x^2 - x + 1"
    python -m src.cli bounds "x^2 - 2"
    python -m src.cli candidates "x^2 + 1" --t 8 --debug-web

Data goes to stdout, diagnostics to stderr.
"""

import sys
from typing import Any, Optional

import click

from ..utils.errors import ParseError
from ..utils.logging import setup_logging
from .request import build_request, error_payload, run


def _execute(**fields: Any) -> None:
    try:
        request = build_request(**fields)
    except ParseError as exc:
        click.echo(error_payload(exc))
        sys.exit(exc.exit_code)
    code, payload = run(request)
    click.echo(payload)
    sys.exit(code)


class ReportingGroup(click.Group):
    """click group whose usage errors become JSON parse-error payloads on stdout."""

    def main(self, *args: Any, standalone_mode: bool = True, **kwargs: Any) -> Any:
        if not standalone_mode:
            return super().main(*args, standalone_mode=False, **kwargs)
        try:
            return super().main(*args, standalone_mode=False, **kwargs)
        except click.UsageError as exc:
            error = ParseError(exc.format_message())
            click.echo(error_payload(error))
            sys.exit(error.exit_code)
        except click.ClickException as exc:
            exc.show()
            sys.exit(exc.exit_code)
        except click.Abort:
            click.echo("Aborted!", err=True)
            sys.exit(1)


def _source_options(func):
    func = click.option('--coeffs', default=None, help='JSON array of coefficient strings, index = power')(func)
    func = click.option('--format', 'output_format', type=click.Choice(['json', 'text']), default='json',
                        show_default=True, help='Output format')(func)
    func = click.argument('polynomial', required=False)(func)
    return func


@click.group(cls=ReportingGroup)
@click.option('--log-level', default=None, help='Console log level (stderr)')
def main(log_level: Optional[str]) -> None:
    """Certified root finding for polynomials over Q(i)."""
    setup_logging(level=log_level, force=log_level is not None)


@main.command()
@_source_options
@click.option('--t', 't', type=int, default=None, help='Binary digits after the point')
def roots(polynomial: Optional[str], coeffs: Optional[str], output_format: str, t: Optional[int]) -> None:
    """Distinct roots, multiplicities and exact t-digit expansions."""
    _execute(command='roots', polynomial=polynomial, coeffs=coeffs, format=output_format, t=t)


@main.command()
@_source_options
@click.option('--root', type=int, default=None, help='Root id (anchor order by real, then imaginary part)')
@click.option('--k', 'k', type=int, default=None, help='Fractional digit position')
@click.option('--k-to', 'k_to', type=int, default=None, help='Last position of a digit range')
def digits(polynomial: Optional[str], coeffs: Optional[str], output_format: str,
           root: Optional[int], k: Optional[int], k_to: Optional[int]) -> None:
    """Binary digit k (or digits k..k-to) of a real root."""
    _execute(command='digits', polynomial=polynomial, coeffs=coeffs, format=output_format,
             root=root, k=k, k_to=k_to)


@main.command()
@_source_options
def factor(polynomial: Optional[str], coeffs: Optional[str], output_format: str) -> None:
    """Square-free decomposition."""
    _execute(command='factor', polynomial=polynomial, coeffs=coeffs, format=output_format)


@main.command()
@_source_options
def bounds(polynomial: Optional[str], coeffs: Optional[str], output_format: str) -> None:
    """Cauchy root annulus and self-separation bound."""
    _execute(command='bounds', polynomial=polynomial, coeffs=coeffs, format=output_format)


@main.command()
@_source_options
@click.option('--t', 't', type=int, default=None, help='Requested precision')
@click.option('--factor-index', type=int, default=None, help='Use this square-free factor')
@click.option('--debug-web', is_flag=True, help='Include one trace line per spiderweb sample')
def candidates(polynomial: Optional[str], coeffs: Optional[str], output_format: str,
               t: Optional[int], factor_index: Optional[int], debug_web: bool) -> None:
    """Certified candidate approximations of the roots of a square-free polynomial."""
    _execute(command='candidates', polynomial=polynomial, coeffs=coeffs, format=output_format,
             t=t, factor_index=factor_index, debug_web=debug_web)


if __name__ == '__main__':
    main()
