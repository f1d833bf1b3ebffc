"""Shared record of acceptance verdicts, printed in the pytest terminal summary."""

RESULTS: dict = {}


def record(number: int, ok: bool, detail: str = "") -> str:
    line = f"{'PASS' if ok else 'FAIL'} criterion {number:2d}: {detail}"
    RESULTS[number] = line
    print(line)
    return line
