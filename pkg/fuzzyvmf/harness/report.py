"""
Axiom reports and their line-oriented text serialization.

Format, one block per report::

    # <subject> seed=<seed>
    <axiom_id>\t<checked>\t<violations>
    -\t<inputs>\t<lhs>\t<rhs>\t<slack>      (one line per violation)
"""

from dataclasses import dataclass, field
from typing import List

import numpy as np


@dataclass(frozen=True)
class Violation:
    inputs: str
    lhs: float
    rhs: float
    slack: float


@dataclass
class AxiomReport:
    axiom_id: str
    subject: str = ''
    seed: int = 0
    checked: int = 0
    violations: List[Violation] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def record(self, ok: bool, inputs, lhs: float, rhs: float, slack: float = 0.0):
        self.checked += 1
        if not ok:
            self.violations.append(Violation(format_inputs(inputs), float(lhs), float(rhs), float(slack)))


def format_inputs(inputs) -> str:
    if isinstance(inputs, str):
        return inputs
    if isinstance(inputs, dict):
        return ' '.join(f'{key}={format_inputs(value)}' for key, value in inputs.items())
    if isinstance(inputs, (np.ndarray, np.generic)):
        return repr(np.asarray(inputs).tolist())
    return repr(inputs)


def format_reports(reports: List[AxiomReport]) -> str:
    lines = []
    for report in reports:
        lines.append(f'# {report.subject} seed={report.seed}')
        lines.append(f'{report.axiom_id}\t{report.checked}\t{len(report.violations)}')
        for v in report.violations:
            lines.append(f'-\t{v.inputs}\t{v.lhs!r}\t{v.rhs!r}\t{v.slack!r}')
    return '\n'.join(lines) + '\n'


def parse_reports(text: str) -> List[AxiomReport]:
    reports = []
    subject, seed = '', 0
    for line in text.splitlines():
        if not line:
            continue
        if line.startswith('# '):
            head, _, seed_part = line[2:].rpartition(' seed=')
            subject, seed = head, int(seed_part)
        elif line.startswith('-\t'):
            _, inputs, lhs, rhs, slack = line.split('\t')
            reports[-1].violations.append(Violation(inputs, float(lhs), float(rhs), float(slack)))
        else:
            axiom_id, checked, _ = line.split('\t')
            reports.append(AxiomReport(axiom_id, subject=subject, seed=seed, checked=int(checked)))
    return reports
