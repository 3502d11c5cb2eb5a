"""Asymmetric scenario: the source lives in Alice's lab.

Only Bob's photon crosses a channel; the loss grid is in dB.  Loss does two
things at once: it binomially erases recorded coincidences, and every lost
photon leaves a lone click at Alice that can pair with Bob-side channel
singles (rate T_B) into accidentals.  With T_B = 0 the per-coincidence key
rate holds steady on average and only the run-to-run spread explodes; with
T_B > 0 the accidentals grow with loss and the rate collapses.
Run: python demos/03_loss_and_bob_noise.py  (about 15 s)
"""

from qkdnoise import AsymmetricScenario, run_asymmetric

GRID = tuple(float(db) for db in range(0, 21, 2))
RUNS = 100
SEED = 1

for bob_rate in (0.0, 1.6e5, 3.2e5):
    scenario = AsymmetricScenario(d=4, k=4, loss_grid=GRID, bob_channel_rate=bob_rate)
    summaries = run_asymmetric(scenario, n_runs=RUNS, seed=SEED)
    print(f"d=4, k=4, Bob channel rate T_B = {bob_rate:g} singles/s")
    print("  loss(dB)   mean    [min .. max]    spread")
    for s in summaries:
        spread = s.max_bpsc - s.min_bpsc
        print(
            f"  {s.param:7.1f}  {s.mean_bpsc:6.3f}  "
            f"[{s.min_bpsc:5.3f} .. {s.max_bpsc:5.3f}]  {spread:6.3f}"
        )
    print()

print("the T_B = 0 envelope widens with loss while the mean barely moves;")
print("with T_B > 0 the mean itself collapses well before 20 dB.")
