"""DSL documents shared by the service, tool, CLI and server tests."""

BELL = (
    "state: |1:t1> (x) |1:t1> - |-1:t1> (x) |-1:t1>\n"
    "weight: (1/(2*sqrt(2))) * t1'\n"
    "measure: d t1', d t1\n"
    "target: PsiPlus\n"
)

UNREACHABLE = "state: |1:t1> (x) |1:t1>\nmeasure: d t1', d t1\ntarget: PhiPlus\n"

NO_WEIGHT = "state: |1:t1> (x) |1:t1>\nmeasure: d t1', d t1\n"

BROKEN = "state: |1:t1\n"
