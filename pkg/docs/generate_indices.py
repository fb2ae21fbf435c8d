# docs/generate_indices.py
from pathlib import Path

from compton_width.constants import CheckCode

# ruff: noqa: E501
# flake8: noqa: E501

OUTPUT_DIR = Path("docs/source/checks")
OUTPUT_DIR.mkdir(parents=True, exist_ok=True)
OUTPUT_FILE = OUTPUT_DIR / "checks_index.rst"


OUTPUT_FILE.write_text("")
with OUTPUT_FILE.open("a", encoding="utf-8") as f:
    for group_title, prefix in [
        ("Kernels", "KERNEL_"),
        ("Norms and identities", "NORM_"),
        ("Quadrature", "QUAD_"),
        ("Shapes and widths", "SHAPE_"),
        ("Spreading", "SPREAD_"),
        ("Validity", "VALID_"),
    ]:
        f.write(f"{group_title}\n{'-' * len(group_title)}\n\n")
        f.write(".. toctree::\n   :maxdepth: 1\n\n")

        for check in CheckCode:
            if check.code.startswith(prefix):
                f.write(f"   {check.code}\n")
        f.write("\n")


def generate_rst_file(check: CheckCode) -> None:
    """Generate a single .rst file for a given CheckCode"""
    filename = OUTPUT_DIR / f"{check.code}.rst"

    header = f"{check.code} - {check.label}"
    underline = "=" * len(header)

    content_lines = [
        f".. _{check.code}:\n",
        header,
        underline,
        "",
        f"**Check Code**: {check.code}",
        "",
        f"**Message**: ``{check.message}``",
        "",
        "**Back to**: :ref:`checks`",
        "",
    ]

    filename.write_text("\n".join(content_lines), encoding="utf-8")
    print(f"Generated: {filename}")


for check in CheckCode:
    generate_rst_file(check)
