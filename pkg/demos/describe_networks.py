"""
Network cost tables
===================

Builds the two backbone presets, prints their per-layer cost reports and
shows that the closed-form parameter count of a single module agrees with
a direct walk over its layers.
"""

from stdcnet import (
    StdcModuleSpec,
    build_network,
    module_param_count,
    module_param_count_enumerated,
    network_cost,
    stdc1_config,
    stdc2_config,
)

# Full per-layer report for the small preset at the classification resolution.
report = network_cost(build_network(stdc1_config()), (224, 224))
print(report.to_text())

# Totals only for the larger preset.
report2 = network_cost(build_network(stdc2_config()), (224, 224))
print(f"\nstdc2 totals: {report2.total_params:,} params "
      f"({report2.total_params_no_bn:,} without norm affine), {report2.total_macs:,} MACs")

# One module in closed form vs. enumeration: the identity is exact, and the
# count barely moves as the block count grows.
print("\nmodule parameters, 64 -> 256 channels:")
for n in range(2, 7):
    spec = StdcModuleSpec(64, 256, num_blocks=n)
    closed = module_param_count(spec)
    walked = module_param_count_enumerated(spec)
    assert closed == walked
    print(f"  {n} blocks: {closed:>8,}")
