"""Named classes from the catalog, used through the expression language."""
from __future__ import annotations

from bousfield.catalog import lookup
from bousfield.cli import format_value, run

element, exactness = lookup("K'", 3)
print("K'(3):", element, exactness.value)

for text in ("@E(1) * @H", "@K(2) * @K(3)", "@K(2) <= @BP", "@T(2) * @I_T(1)",
             "heyting(@KU, @HQ)", "sigma(@J(w))"):
    print(f"{text:22} = {format_value(run(text))}")

print(format_value(run("@TMF"), "json"))
