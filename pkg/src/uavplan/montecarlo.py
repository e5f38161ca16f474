"""Monte-Carlo estimate of coverage probability.

Each sample draws the link state (LoS with the elevation-dependent
probability) and a Gaussian shadowing loss for that state, then tests the
received power against the same mean-interference threshold the analytic
formula uses. Interference itself is not sampled.

Samples are generated in fixed-size chunks, each with its own Philox stream
spawned from the seed, so the result does not depend on how chunks are
distributed over worker threads.
"""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass

import numpy as np

from .channel import main_lobe_gain_db, path_loss_db, shadow_sigma
from .coverage import CoverageQuery, q_arguments

CHUNK = 1 << 14


@dataclass(frozen=True)
class SimResult:
    empirical_pcov: float
    std_error: float
    n_samples: int
    seed: int

    def to_dict(self) -> dict:
        return asdict(self)


def _count_chunk(child: np.random.SeedSequence, n: int, p_los: float, mu: tuple, sigma: tuple,
                 budget: float, pmin: float) -> int:
    rng = np.random.Generator(np.random.Philox(child))
    los = rng.random(n) < p_los
    z = rng.standard_normal(n)
    psi = np.where(los, mu[0] + sigma[0] * z, mu[1] + sigma[1] * z)
    return int(np.count_nonzero(budget - psi >= pmin))


def simulate_coverage(query: CoverageQuery, n_samples: int, seed: int = 0,
                      workers: int = 1) -> SimResult:
    if n_samples < 1:
        raise ValueError("n_samples must be >= 1")
    p_los, _, _, pmin = q_arguments(query)
    env, radio, geom = query.env, query.radio, query.serving
    el = geom.elevation_rad
    mu = (env.mu_los_db, env.mu_nlos_db)
    sigma = (shadow_sigma(el, env, True), shadow_sigma(el, env, False))
    # received power before shadowing, dBm
    budget = (radio.tx_power_dbm + main_lobe_gain_db(radio.beamwidth_deg)
              - path_loss_db(geom.distance_m, radio.carrier_hz, env.path_loss_exp))

    sizes = [CHUNK] * (n_samples // CHUNK)
    if n_samples % CHUNK:
        sizes.append(n_samples % CHUNK)
    children = np.random.SeedSequence(seed).spawn(len(sizes))

    def work(i):
        return _count_chunk(children[i], sizes[i], p_los, mu, sigma, budget, pmin)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            hits = sum(pool.map(work, range(len(sizes))))
    else:
        hits = sum(work(i) for i in range(len(sizes)))
    p = hits / n_samples
    return SimResult(p, math.sqrt(p * (1 - p) / n_samples), n_samples, seed)
