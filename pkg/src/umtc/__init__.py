"""Verification and computation engine for skeletal unitary (pre-)modular tensor categories."""
from .bundle import (CategoryBundle, bundle_from_dict, bundle_to_dict, catalog_names, dumps_bundle, load_bundle,
                     loads_bundle, save_bundle, verify_bundle)
from .errors import (BundleParseError, CapacityError, FactorizationCertificateError, IncoherentDataError,
                     IncompleteTableError, InconsistencyError, InvalidGaugeError, MissingDataError, NumericalError,
                     OrderingError, SolverIncompleteError, StructuralError, UMTCError, UnsupportedError,
                     ValidationError)
from .fingerprint import Fingerprint, bundle_fingerprint, invariant_fingerprint
from .fusion import (DimensionVector, FusionRing, ValidationReport, Violation, fp_dimensions, global_dimension,
                     ring_from_rules, validate_ring)
from .modular import (ModularDataset, ModularityVerdict, killing_ring_check, modular_dataset, modularity_check,
                      monodromy, s_matrix, twists, verlinde_reconstruct)
from .points import (AbstractPointCandidate, Mode, Outcome, comparability_resolve, holomorphic_obstruction,
                     intersection_category, modular_spectrum_check, trivial_pairing)
from .report import ReportDocument
from .solver import UBTCCatalog, build_system, enumerate_ubtcs, solve
from .subcategories import (FusionSubcategory, centralizer, closure, deligne_product, double_centralizer_check,
                            enumerate_subcategories, is_modular_sub, is_prime, prime_factorize, subcategory)
from .tensor_data import (FSymbols, GaugeTransform, RSymbols, apply_gauge, check_hexagon, check_pentagon,
                          check_unitarity, frobenius_schur_indicators, random_gauge, reverse_braiding)

__version__ = "0.1.0"

__all__ = [
    "AbstractPointCandidate",
    "BundleParseError",
    "CapacityError",
    "CategoryBundle",
    "DimensionVector",
    "FSymbols",
    "FactorizationCertificateError",
    "Fingerprint",
    "FusionRing",
    "FusionSubcategory",
    "GaugeTransform",
    "IncoherentDataError",
    "IncompleteTableError",
    "InconsistencyError",
    "InvalidGaugeError",
    "MissingDataError",
    "Mode",
    "ModularDataset",
    "ModularityVerdict",
    "NumericalError",
    "OrderingError",
    "Outcome",
    "RSymbols",
    "ReportDocument",
    "SolverIncompleteError",
    "StructuralError",
    "UBTCCatalog",
    "UMTCError",
    "UnsupportedError",
    "ValidationError",
    "ValidationReport",
    "Violation",
    "apply_gauge",
    "build_system",
    "bundle_fingerprint",
    "bundle_from_dict",
    "bundle_to_dict",
    "catalog_names",
    "centralizer",
    "check_hexagon",
    "check_pentagon",
    "check_unitarity",
    "closure",
    "comparability_resolve",
    "deligne_product",
    "double_centralizer_check",
    "dumps_bundle",
    "enumerate_subcategories",
    "enumerate_ubtcs",
    "fp_dimensions",
    "frobenius_schur_indicators",
    "global_dimension",
    "holomorphic_obstruction",
    "intersection_category",
    "invariant_fingerprint",
    "is_modular_sub",
    "is_prime",
    "killing_ring_check",
    "load_bundle",
    "loads_bundle",
    "modular_dataset",
    "modular_spectrum_check",
    "modularity_check",
    "monodromy",
    "prime_factorize",
    "random_gauge",
    "reverse_braiding",
    "ring_from_rules",
    "s_matrix",
    "save_bundle",
    "solve",
    "subcategory",
    "trivial_pairing",
    "twists",
    "validate_ring",
    "verify_bundle",
    "verlinde_reconstruct",
]
