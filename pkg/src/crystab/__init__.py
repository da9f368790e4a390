"""Exact arithmetic and verification tools for mod p reductions of crystabelline representations."""

from .padic import (PadicConfig, PadicElem, PrecisionError, DomainError, teichmuller,
                    valuations, reduce_mod_m, sqrt)

__all__ = ["PadicConfig", "PadicElem", "PrecisionError", "DomainError", "teichmuller",
           "valuations", "reduce_mod_m", "sqrt"]
