"""Python access to the heckeho C++ library."""

from ._heckeho import (
    AffChar,
    DomainError,
    GaloisField,
    GroupSpec,
    SimpleModule,
    all_characters,
    build_simple,
    build_spec,
    char_label,
    classify,
    conj_char,
    enumerate_simples,
    faces,
    field,
    has_finite_pd,
    ho_delta_hom,
    ho_isomorphic,
    is_supersingular,
    make_char,
    mod_isomorphic,
    oracle_check,
    res_face_projective,
    run_cli,
    s_xi,
    stabilizer,
)

__all__ = [name for name in dir() if not name.startswith("_")]
