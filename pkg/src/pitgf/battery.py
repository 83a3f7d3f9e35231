"""Config batteries for cross-checking the chi implementations."""

from __future__ import annotations

from .partitions import InvalidPitConfig, PitConfig, partitions_in_box


def standard_battery(max_n, max_m, max_part, lam_rows=None):
    """All valid configs in the (max_n, max_m, max_part) box, canonically ordered.

    nu and mu range over partitions fitting in their n x max_part and
    m x max_part boxes.  Admissible lam with bounded part values form an
    infinite family (arbitrarily many trailing columns of height <= m), so
    lam is additionally capped at lam_rows rows, defaulting to max(n, m, 1);
    longer-lam behaviour is exercised by dedicated spot checks.
    """
    configs = []
    for n in range(max_n + 1):
        for m in range(max_m + 1):
            rows = lam_rows if lam_rows is not None else max(n, m, 1)
            for nu in partitions_in_box(n, max_part):
                for mu in partitions_in_box(m, max_part):
                    for lam in partitions_in_box(rows, max_part):
                        config = PitConfig(n, m, nu=nu, mu=mu, lam=lam)
                        try:
                            config.validate()
                        except InvalidPitConfig:
                            continue
                        configs.append(config)
    configs.sort(key=config_key)
    return configs


def config_key(config):
    """Canonical (lexicographic) sort key for deterministic reports."""
    return (config.n, config.m, config.nu.parts, config.mu.parts,
            config.lam.parts)
