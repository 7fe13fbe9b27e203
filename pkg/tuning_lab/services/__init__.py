"""Services layer: campaign commands."""

from .campaign import (
    CampaignService,
    CommandResult,
    LoadedReport,
    compare_methods,
    load_reports,
    report,
)

__all__ = [
    "CampaignService",
    "CommandResult",
    "LoadedReport",
    "compare_methods",
    "load_reports",
    "report",
]
