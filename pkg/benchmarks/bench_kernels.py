"""Benchmark the compiled kernels against the pure-numpy fallback.

Times the two hot kernels (LSTM gate activations, fused Adam) and a full
training episode per agent. Run `python benchmarks/bench_kernels.py --both`
to measure both backends (re-executes itself with GIVECOUNT_PURE=1).
"""

from __future__ import annotations

import argparse
import os
import subprocess
import sys
import time

import numpy as np


def bench(fn, *, repeat: int = 200, warmup: int = 10) -> float:
    for _ in range(warmup):
        fn()
    t0 = time.perf_counter()
    for _ in range(repeat):
        fn()
    return (time.perf_counter() - t0) / repeat


def kernel_benchmarks(hidden: int = 512, n_in: int = 404):
    from givecount._kernels import adam_update, lstm_act_backward, lstm_act_forward

    rng = np.random.default_rng(0)
    u = rng.normal(size=4 * hidden)
    c = rng.normal(size=hidden)
    _, _, cache = lstm_act_forward(u, c)
    dh = rng.normal(size=hidden)
    dc = rng.normal(size=hidden)
    nparams = (n_in + hidden) * 4 * hidden
    value = rng.normal(size=nparams)
    grad = rng.normal(size=nparams)
    m = np.zeros(nparams)
    v = np.zeros(nparams)

    rows = [
        ("lstm_act_forward", bench(lambda: lstm_act_forward(u, c))),
        ("lstm_act_backward", bench(lambda: lstm_act_backward(dh, dc, cache, c))),
        ("adam_update (2.1M params)", bench(lambda: adam_update(value, grad, m, v, 5,
                                                                1e-4, 0.9, 0.999, 1e-8),
                                            repeat=20)),
    ]
    return rows


def episode_benchmarks():
    from givecount.agents import build_agent
    from givecount.config import scaled_config
    from givecount.counter import Counter
    from givecount.episodes import run_episode
    from givecount.rng import RngStream
    from givecount.training import reinforce_update

    cfg = scaled_config()
    counter = Counter(cfg.counter, RngStream(0))
    counter.freeze()
    rows = []
    for kind in ("esbn", "dot", "lstm", "transformer"):
        agent = build_agent(cfg.agent_config(kind), RngStream(1))
        rng = RngStream(2)

        def one():
            trace, ep = run_episode(agent, counter, cfg.env, rng, n_target=3)
            reinforce_update(agent, trace, ep, 5e-5)

        rows.append((f"episode+update [{kind}]", bench(one, repeat=20, warmup=3)))
    return rows


def run(args) -> None:
    from givecount._kernels import BACKEND

    print(f"backend: {BACKEND}")
    for name, secs in kernel_benchmarks():
        print(f"  {name:28s} {secs * 1e6:10.1f} us")
    if not args.kernels_only:
        for name, secs in episode_benchmarks():
            print(f"  {name:28s} {secs * 1e3:10.2f} ms")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--both", action="store_true",
                        help="run compiled then pure-numpy backend")
    parser.add_argument("--kernels-only", action="store_true")
    args = parser.parse_args()
    if args.both:
        base = [sys.executable, __file__] + (["--kernels-only"] if args.kernels_only else [])
        subprocess.run(base, check=True, env={**os.environ, "GIVECOUNT_PURE": ""})
        subprocess.run(base, check=True, env={**os.environ, "GIVECOUNT_PURE": "1"})
        return
    run(args)


if __name__ == "__main__":
    main()
