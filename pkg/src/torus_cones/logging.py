# Copyright(C) 2024 Torus Cones Developers
# Licensed under the MIT License

from dtcc_core.common import init_logging

debug, info, warning, error, critical = init_logging("torus-cones")


def claim_summary_info(reports, label: str = "") -> bool:
  """Logs one line per properness claim and returns whether all passed.

    Args:
        reports (list[ClaimReport]): Reports from verify_properness.
        label (str): Prefix naming the cone the reports belong to.
    """
  prefix = f"{label}: " if label else ""
  all_passed = True
  for report in reports:
    status = "pass" if report.passed else "FAIL"
    message = f"{prefix}claim ({report.claim}) {status}, max residual {report.max_residual:.3e}"
    if report.passed:
      info(message)
    else:
      all_passed = False
      warning(message + f" [{report.details}]")
  return all_passed
