// SPDX-License-Identifier: Apache-2.0

//! Closed and parallel 2-forms, structure endomorphisms and Kähler-type certificates.

mod certificate;
mod endo;
mod forms;
mod heisenberg;
mod search;

pub use certificate::{certify, StructureCertificate, StructureKind};
pub use endo::{
    eigen_split, endo_from_form, form_from_endo, integrable, nijenhuis, EigenSplit, NijenhuisTensor,
};
pub use forms::{
    closed_two_forms, d_one_form, d_two_form, nondegenerate_element, nondegenerate_search,
    pair_label, pairs, parallel_two_forms, triples, FormSpace, Nondegeneracy, ThreeForm, TwoForm,
    GRID_LIMIT,
};
pub use heisenberg::{
    generalized_heisenberg, heisenberg, heisenberg_nikolayevsky, heisenberg_structure,
};
pub use search::{
    default_samples, parameter_grid, search_family, search_structures, square_system,
    FamilyInstance, FamilySearch, ObstructionReport, ObstructionStage, QuadraticEquation,
    QuadraticSystem, SearchOutcome, StructureSearch,
};
