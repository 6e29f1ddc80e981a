from specgap.certify.census import CensusReport, d3_ended_assemblies, find_minimal
from specgap.certify.enumerate import (
    KNOWN_COUNTS,
    CensusEntry,
    audit_census,
    complement_oracle,
    enumerate_quartic,
)
from specgap.certify.tables import (
    AsymptoticReport,
    AsymptoticRow,
    H00Report,
    H00Row,
    SandwichReport,
    SandwichRow,
    Table2Report,
    Table2Row,
    ceil3,
    verify_asymptotic,
    verify_h00,
    verify_sandwich,
    verify_table2,
)

__all__ = [
    # Enumeration
    "KNOWN_COUNTS",
    "CensusEntry",
    "enumerate_quartic",
    "complement_oracle",
    "audit_census",
    # Census
    "CensusReport",
    "find_minimal",
    "d3_ended_assemblies",
    # Family tables
    "Table2Row",
    "Table2Report",
    "verify_table2",
    "AsymptoticRow",
    "AsymptoticReport",
    "verify_asymptotic",
    "SandwichRow",
    "SandwichReport",
    "verify_sandwich",
    "H00Row",
    "H00Report",
    "verify_h00",
    "ceil3",
]
