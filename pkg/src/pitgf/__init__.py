"""Exact generating functions of plane partitions with a pit.

The pit is the constraint a_(n+1, m+1) = 0 on a plane partition with
prescribed row, column, and infinite-region asymptotics (nu, mu, lam).  The
package computes the counting series chi^{n,m}_{mu,nu,lam}(q) five ways --
a block-determinant formula, a bosonic sum, a fully explicit sum, the wall
formula for m = 0, and brute-force enumeration -- plus the lattice-path and
polyhedral machinery behind them, and cross-certifies everything
coefficient by coefficient in exact integer arithmetic.
"""

from .qseries import (INFINITY, QSeries, det, invert, monomial, pochhammer,
                      qbinom)
from .partitions import (FrobeniusData, InvalidPitConfig, Partition,
                         PitConfig, a_shifted, add_ribbon_by_jump,
                         atypicality, frobenius_data, is_ribbon,
                         is_ribbon_by_jump, particles, partitions_in_box,
                         ribbon_decompositions, skew_boxes)
from .oracle import (Window, WindowError, enumerate_chi,
                     enumerate_v_partitions, minimal_window, weight)
from .formulas import (ThetaTerm, chi, chi_bos, chi_det, chi_explicit,
                       chi_wall, macmahon_staircase, plane_partition_gf,
                       r_series)
from .lgv import (StripGraph, StripTooSmall, Terminal, closed_form, lgv_check,
                  path_gf, source_target_layout)
from .brion import (BrionPreconditionError, VertexContribution,
                    order_independence_check, ribbon_cone_contribution,
                    sq_direct, sq_min_weight, vertex_sum_by_order,
                    vertex_sum_general, vertex_sum_m0, walls_ribbon_splits)
from .battery import standard_battery

__all__ = [name for name in dir() if not name.startswith("_")]
