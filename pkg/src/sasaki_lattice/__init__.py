"""Exact finite quantum-logic toolkit: orthomodular lattices, boolean
subalgebras, partial descriptions, Sasaki filters, subspace lattices and
selection searches on ray configurations."""

from .constructors import GreechieDiagram, boolean_algebra, from_greechie, mo, parse_greechie
from .descriptions import (PartialDescription, check_e1_iff_e2, description_to_filter,
                           enumerate_descriptions, filter_to_description, roundtrip_check,
                           validate_e1, validate_e2)
from .filters import (SasakiFilter, SfLattice, check_principal_trace, embed_up_properties,
                      enumerate_filters, generate_filter, is_sasaki_filter, principal_filter,
                      sf_atoms, sf_join, sf_meet)
from .hilbert import dim2_choice_check, nonprincipal_construction, probe_atom_forcing
from .ks import RayConfig, build_config, search_coloring, selection_to_filter_check
from .measurements import (BooleanSubalgebra, FiniteMeasurement, enumerate_fbas,
                           enumerate_measurements, fba_to_measurement, finer_than,
                           measurement_to_fba, pi_b, refinement_map, sem, sem2,
                           validate_measurement)
from .oml import FiniteOml, atoms, commutes, join, meet, sasaki_project, verify_oml
from .subspace import Subspace, span, sub_join, sub_meet, sub_ortho, sub_sasaki

__version__ = "0.1.0"
