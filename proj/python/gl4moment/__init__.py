"""Python access to the gl4moment toolkit.

Numeric helpers return Python scalars; functions producing reports return
decoded JSON dictionaries with the same layout as the command-line tool.
"""

import json

from . import _gl4moment as _core
from ._gl4moment import (  # noqa: F401
    SchemaError,
    __version__,
    bp_series,
    character_table,
    dirichlet_l,
    g_kernel,
    hom_coeff,
    orthogonality,
    phi_flat,
    v_kernel,
    w_kernel,
)


def local_factor(alpha, p, s=0.5):
    """The four evaluations of B_p(s) for a Satake tuple, as a report dict."""
    return json.loads(_core.local_factor(list(alpha), p, s))


def main_term(rep, Q, p_max=100000):
    """Main term for a representation given as a dict (the CLI's JSON schema)."""
    return json.loads(_core.main_term(json.dumps(rep), Q, p_max))


def verify(suite="all", seed=7, threads=1):
    return json.loads(_core.verify(suite, seed, threads))
