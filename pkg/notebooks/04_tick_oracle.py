# %% [markdown]
# # Cross-checking the engine against the 1 ms tick simulator

# %%
from rrsched import Policy, PolicyConfig, generate_taskset, simulate, tick_simulate

mismatches = 0
for seed in range(300):
    ts = generate_taskset(12, (1, 30), (1, 5), (0, 50), seed=seed)
    for p in Policy:
        cfg = PolicyConfig(policy=p, quantum_ots=1 + seed % 6, switch_overhead=seed % 3)
        if simulate(ts, cfg) != tick_simulate(ts, cfg):
            mismatches += 1
print("mismatches:", mismatches)
