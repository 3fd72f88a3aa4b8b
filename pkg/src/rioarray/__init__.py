"""Exact Riordan arrays, the one-parameter Catalan triangles, and identity checks."""
from .exact import QQ, ZZ, ZZ_R, PolyR, binomial, exact_div
from .series import Series
from .riordan import RiordanArray, Triangle, group_inv, group_mul
from .catalog import R, catalan_C, catalan_r, pascal, r_riordan, shapiro_B
from .sheffer import ShefferSeq, sheffer_of
from .identities import IdentityReport, run_all

__version__ = "0.1.0"
