"""Shared record of acceptance outcomes, printed in the terminal summary."""
from contextlib import contextmanager

ACCEPTANCE_LINES: list[str] = []


@contextmanager
def criterion(tag: str, title: str):
    """Record PASS or FAIL for one criterion; `notes` collects detail for the line."""
    notes: list[str] = []
    try:
        yield notes
    except BaseException:
        ACCEPTANCE_LINES.append(f"FAIL  {tag}  {title}  {'; '.join(notes)}")
        raise
    ACCEPTANCE_LINES.append(f"PASS  {tag}  {title}  {'; '.join(notes)}")
    print(ACCEPTANCE_LINES[-1])
