# %% [markdown]
# # Five-process case study
#
# Five jobs released together, 4 ms base quantum, under the three policies.

# %%
from rrsched import CASE_STUDY, Policy, PolicyConfig, compare, compute_metrics, emit_gantt, simulate

for p in CASE_STUDY:
    print(p)

# %% [markdown]
# Traces. Plain RR hands P1 its last 9 ms as three separate dispatches.

# %%
traces = {p: simulate(CASE_STUDY, PolicyConfig(policy=p, quantum_ots=4)) for p in Policy}
for policy, trace in traces.items():
    print(policy.value)
    print(emit_gantt(trace))

# %% [markdown]
# Exact averages plus the published integers; the shortest-first row does not
# match any schedule the queue rules can produce.

# %%
table = compare([(p, compute_metrics(t)) for p, t in traces.items()])
print(table.render())
