# src/theorems/results.py
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from src.linalg.eigen import Spectrum
from src.linalg.poly import RealPoly


@dataclass
class TheoremResult:
    """
    Output of one closed-form evaluation.

    Exactly one of spectrum / polynomial / values is set:
      - spectrum: the full L_alpha spectrum (subset_only False)
      - polynomial: a characteristic polynomial
      - values: (value, lower-bound multiplicity) pairs that must appear in
        the oracle spectrum (subset_only True)
    """

    provenance: str
    spectrum: Optional[Spectrum] = None
    polynomial: Optional[RealPoly] = None
    values: Optional[List[Tuple[float, int]]] = None
    subset_only: bool = False
    notes: List[str] = field(default_factory=list)

    @classmethod
    def full(cls, provenance: str, spectrum: Spectrum, notes: Optional[List[str]] = None) -> "TheoremResult":
        return cls(provenance, spectrum=spectrum, notes=list(notes or []))

    @classmethod
    def subset(
        cls,
        provenance: str,
        values: List[Tuple[float, int]],
        notes: Optional[List[str]] = None,
    ) -> "TheoremResult":
        return cls(provenance, values=list(values), subset_only=True, notes=list(notes or []))

    @classmethod
    def poly(cls, provenance: str, polynomial: RealPoly, notes: Optional[List[str]] = None) -> "TheoremResult":
        return cls(provenance, polynomial=polynomial, notes=list(notes or []))

    @property
    def kind(self) -> str:
        if self.spectrum is not None:
            return "spectrum"
        if self.polynomial is not None:
            return "polynomial"
        return "values"

    def to_dict(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {
            "provenance": self.provenance,
            "kind": self.kind,
            "subset_only": self.subset_only,
            "notes": list(self.notes),
        }
        if self.spectrum is not None:
            out["spectrum"] = self.spectrum.to_records()
        if self.polynomial is not None:
            out["polynomial"] = self.polynomial.coefficients_high_first()
        if self.values is not None:
            out["values"] = [{"value": v, "multiplicity": m} for v, m in self.values]
        return out
