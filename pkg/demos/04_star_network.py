"""Star network: Bob's eight detector paths split over three labs (2+2+4).

Each lab sees the same channel-light intensity F (singles per second), so a
lab with more detectors spreads it thinner: per-detector rates follow
S_Bi = F / d_i, which makes Bob3's detectors run at half the singles rate
of Bob1's.  Every lab is evaluated on its own diagonal block pair, so Bob1
and Bob2 behave like standalone d=2,k=2 links and Bob3 like d=4,k=4.
Run: python demos/04_star_network.py  (about 10 s)
"""

from qkdnoise import NetworkScenario, load_network_builtin, run_network

GRID = tuple(float(db) for db in range(0, 21, 4))
RUNS = 100
SEED = 1

record = load_network_builtin()
print(f"network record: d={record.d}, partition {record.partition}")
for f_rate in (0.0, 3.2e5):
    print(f"\nlab intensity F = {f_rate:g} singles/s")
    per_detector = [f_rate / d_i for d_i in record.partition]
    print(f"  per-detector rates: " + ", ".join(f"{s:g}" for s in per_detector))
    scenario = NetworkScenario(loss_grid=GRID, lab_rate=f_rate)
    summaries = run_network(scenario, n_runs=RUNS, seed=SEED)
    print("  loss(dB)   Bob1 mean   Bob2 mean   Bob3 mean")
    for s in summaries:
        b1, b2, b3 = (s.per_party[label][0] for label in ("Bob1", "Bob2", "Bob3"))
        print(f"  {s.param:7.1f}   {b1:9.3f}   {b2:9.3f}   {b3:9.3f}")

print()
print("Bob3 tracks a standalone d=4,k=4 link (his block came from that basis")
print("choice) and can reach up to 2 bits per coincidence while the 2-detector")
print("labs top out at 1.")
