# %% [markdown]
# # How the intelligent slice is built
#
# Each process gets its slice once, at admission:
# base quantum + priority bonus + shortness bonus + the leftover that would
# otherwise force one more dispatch.

# %%
from rrsched import CASE_STUDY, PolicyConfig, ProcessSpec, compute_its, its_table

cfg = PolicyConfig(policy="its", quantum_ots=4)
print(f"{'pid':>3} {'burst':>5} {'ots':>4} {'pc':>3} {'sc':>3} {'cc':>3} {'bal':>4} {'csc':>4} {'its':>4}")
bursts = {p.pid: p.burst for p in CASE_STUDY}
for r in its_table(CASE_STUDY, cfg):
    print(f"{r.pid:>3} {bursts[r.pid]:>5} {r.ots:>4} {r.pc:>3} {r.sc:>3} {r.cc:>3} {r.balance:>4} {r.csc:>4} {r.its:>4}")

# %% [markdown]
# The leftover only counts when it is positive and smaller than the base
# quantum. Sweep the burst of a priority-2 job to see where it kicks in.

# %%
for burst in range(1, 16):
    b = compute_its(ProcessSpec(1, 0, burst, 2), cfg)
    print(burst, b.its, "single dispatch" if b.its >= burst else "")

# %% [markdown]
# Bonuses are configurable. A steeper priority map:

# %%
steep = PolicyConfig(policy="its", quantum_ots=4, pc_map={1: 3, 2: 1})
print([r.its for r in its_table(CASE_STUDY, steep)])
