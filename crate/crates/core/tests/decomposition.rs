use schubert::asm::{entrywise_extreme, perm_set_brute_force, Extreme, RankTable};
use schubert::decomp::{
    bruhat_minimal, get_asm, is_asm_ideal, is_asm_union, perm_set_of_asm, schubert_decompose,
    schubert_intersect,
};
use schubert::error::Error;
use schubert::groebner::DEFAULT_BUDGET;
use schubert::perm::Permutation;

// First pair (u, v) from S4, in lexicographic order, whose union of matrix
// Schubert varieties is not an ASM variety. Decided by brute force: the ASM
// with the entrywise maximum rank table must have exactly {u, v} as its
// Bruhat-minimal permutations above it.
fn non_asm_witness() -> Option<(Permutation, Permutation)> {
    let perms = Permutation::all(4);
    for (k, u) in perms.iter().enumerate() {
        for v in &perms[k + 1..] {
            if u.bruhat_leq(v) || v.bruhat_leq(u) {
                continue;
            }
            let raw = entrywise_extreme(&[u.rank_table(), v.rank_table()], Extreme::Max).unwrap();
            let a = RankTable::from_matrix(&raw.to_rows()).unwrap().to_asm().unwrap();
            let mut expected = vec![u.clone(), v.clone()];
            expected.sort();
            if perm_set_brute_force(&a).unwrap() != expected {
                return Some((u.clone(), v.clone()));
            }
        }
    }
    None
}

#[test]
fn witness_is_rejected_by_both_tests() {
    let (u, v) = non_asm_witness().expect("S4 has a non-ASM pair");
    assert!(!is_asm_union(&[u.clone(), v.clone()]).unwrap());
    let mut ideal = schubert_intersect(&[u.to_matrix(), v.to_matrix()], DEFAULT_BUDGET).unwrap();
    assert!(!is_asm_ideal(&mut ideal, DEFAULT_BUDGET).unwrap());
    assert!(matches!(get_asm(&ideal), Err(Error::NoAsmAttached)));
    let mut components = schubert_decompose(&ideal, DEFAULT_BUDGET).unwrap();
    components.sort();
    let mut expected = vec![u, v];
    expected.sort();
    assert_eq!(components, expected);
}

#[test]
fn union_test_agrees_with_ideal_test_on_s3_pairs() {
    let perms = Permutation::all(3);
    for u in &perms {
        for v in &perms {
            let pair = [u.clone(), v.clone()];
            let mut ideal = schubert_intersect(&[u.to_matrix(), v.to_matrix()], DEFAULT_BUDGET).unwrap();
            assert_eq!(
                is_asm_union(&pair).unwrap(),
                is_asm_ideal(&mut ideal, DEFAULT_BUDGET).unwrap(),
                "{u} {v}"
            );
        }
    }
}

#[test]
fn recognised_asm_decomposes_back() {
    let mut ideal = schubert_intersect(
        &["3,4,1,2".parse::<Permutation>().unwrap().to_matrix(), "3,2,4,1".parse::<Permutation>().unwrap().to_matrix()],
        DEFAULT_BUDGET,
    )
    .unwrap();
    assert!(is_asm_ideal(&mut ideal, DEFAULT_BUDGET).unwrap());
    let a = get_asm(&ideal).unwrap();
    let mut perms = perm_set_of_asm(&a).unwrap();
    perms.sort();
    assert_eq!(perms, vec!["3,2,4,1".parse().unwrap(), "3,4,1,2".parse().unwrap()]);
}

#[test]
fn bruhat_minimal_drops_larger_members() {
    let w = |s: &str| s.parse::<Permutation>().unwrap();
    assert_eq!(bruhat_minimal(&[w("2,1,3"), w("3,2,1"), w("1,3,2")]), vec![w("2,1,3"), w("1,3,2")]);
    assert!(is_asm_union(&[w("2,1,3"), w("3,2,1")]).unwrap());
}
