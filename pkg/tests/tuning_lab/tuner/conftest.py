"""Fixtures for tuner tests."""

import pytest

from tuning_lab.metrics import APC, UtilityReport
from tuning_lab.tuner import ConfigResult


def make_result(index, config, fc):
    """ConfigResult with a constant APC at ``fc``."""
    return ConfigResult(
        config=config,
        config_index=index,
        utility=UtilityReport(
            F_A=fc, B=fc, F_B=fc, F_C=fc, n=1, Z_l=4.0, d=(fc, fc)
        ),
        apc=APC(mean_best=(fc, fc), runs=1),
        seeds=(index,),
        finals=(fc,),
    )


class StubAssessor:
    """Assessor scoring configurations with a fixed F_C function."""

    runs = 1
    intervals = 1
    z_l = 4.0

    def __init__(self, fc_of):
        self.fc_of = fc_of
        self.runs_executed = 0
        self.phases = []

    def assess_many(self, configs, stream):
        self.phases.append(stream.phase)
        self.runs_executed += len(configs)
        return [
            make_result(i, config, self.fc_of(config.parameters()))
            for i, config in enumerate(configs)
        ]


@pytest.fixture
def stub_assessor():
    """Build a StubAssessor from an F_C function."""
    return StubAssessor


@pytest.fixture
def result_of():
    """Build a ConfigResult with a fixed F_C."""
    return make_result
