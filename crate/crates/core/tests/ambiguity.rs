//! Matrices shared by two different labeled semigraphs.

mod common;

use ::semigraph::{adjacency, reconstruct, RecognitionOptions};
use common::*;

#[test]
fn twin_vertices_swap_roles() {
    // b = v2 and w = v4 each lie on exactly two edges, so swapping which of
    // them is the middle of the long edge leaves every entry unchanged.
    let g = sg(4, &[&[1, 4, 3], &[1, 2], &[2, 3]]);
    let h = sg(4, &[&[1, 2, 3], &[1, 4], &[4, 3]]);
    assert_ne!(g, h);
    assert_eq!(adjacency(&g), adjacency(&h));
}

#[test]
fn chorded_four_cycle() {
    // Both arise in the random corpus (seeds 7 and 129).
    let g = sg(4, &[&[1, 3], &[2, 1, 4], &[2, 3], &[3, 4]]);
    let h = sg(4, &[&[1, 2], &[1, 3], &[1, 4], &[2, 3, 4]]);
    assert_ne!(g, h);
    assert_eq!(adjacency(&g), adjacency(&h));
    assert_eq!(corpus_instance(7), g);
    assert_eq!(corpus_instance(129), h);
}

#[test]
fn recognizer_reports_the_second_semigraph() {
    let g = sg(4, &[&[1, 3], &[2, 1, 4], &[2, 3], &[3, 4]]);
    let h = sg(4, &[&[1, 2], &[1, 3], &[1, 4], &[2, 3, 4]]);
    let opts = RecognitionOptions {
        check_uniqueness: true,
        ..Default::default()
    };
    let out = reconstruct(&adjacency(&g), opts);
    let r = out.accepted().unwrap();
    let mut found = vec![r.semigraph.clone(), r.alternative.clone().unwrap()];
    found.sort_by_key(|s| s.to_string());
    let mut expected = vec![g, h];
    expected.sort_by_key(|s| s.to_string());
    assert_eq!(found, expected);
}

#[test]
fn unambiguous_figure_has_no_alternative() {
    let opts = RecognitionOptions {
        check_uniqueness: true,
        ..Default::default()
    };
    let out = reconstruct(&fig5_matrix(), opts);
    let r = out.accepted().unwrap();
    assert_eq!(r.alternative, None);
    assert!(!r.search_truncated);
}
