use irrtop_core::{Matrix, PrimeField, Subspace};
use proptest::prelude::*;

const PRIMES: [u32; 4] = [2, 3, 5, 7];

fn field(i: usize) -> PrimeField {
    PrimeField::new(PRIMES[i]).unwrap()
}

/// A random matrix over a small prime field.
fn matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = Matrix> {
    (0..PRIMES.len(), 0..=max_rows, 1..=max_cols).prop_flat_map(|(f, r, c)| {
        let p = PRIMES[f];
        prop::collection::vec(prop::collection::vec(0..p, c), r)
            .prop_map(move |rows| Matrix::from_rows(field(f), c, &rows))
    })
}

/// Every vector of `GF(p)^n`.
fn all_vectors(p: u32, n: usize) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..p).map(move |c| {
                    let mut w = v.clone();
                    w.push(c);
                    w
                })
            })
            .collect();
    }
    out
}

fn small(p: u32, n: usize) -> bool {
    (p as u64).pow(n as u32) <= 729
}

fn members(s: &Subspace) -> Vec<Vec<u32>> {
    all_vectors(s.field().modulus(), s.ambient_dim())
        .into_iter()
        .filter(|v| s.contains(v))
        .collect()
}

proptest! {
    #[test]
    fn rref_is_idempotent_and_keeps_row_space(m in matrix(5, 5)) {
        let r = m.rref();
        prop_assert_eq!(r.matrix.rref().matrix, r.matrix.clone());
        prop_assert_eq!(r.matrix.rank(), r.rank);
        prop_assert_eq!(r.pivots.len(), r.rank);
        let before = Subspace::from_matrix_rows(&m);
        let after = Subspace::from_matrix_rows(&r.matrix);
        prop_assert_eq!(before.dim(), r.rank);
        for row in m.row_vecs() {
            prop_assert!(after.contains(row));
        }
        for row in r.matrix.row_vecs() {
            prop_assert!(before.contains(row));
        }
    }

    #[test]
    fn kernel_matches_enumeration(m in matrix(4, 5)) {
        let k = m.kernel();
        prop_assert_eq!(k.dim() + m.rank(), m.cols());
        for v in k.vectors() {
            prop_assert!(m.mul_vec(v).iter().all(|&c| c == 0));
        }
        let p = m.field().modulus();
        if small(p, m.cols()) {
            let zeros = all_vectors(p, m.cols())
                .into_iter()
                .filter(|v| m.mul_vec(v).iter().all(|&c| c == 0))
                .count();
            prop_assert_eq!(zeros as u64, (p as u64).pow(k.dim() as u32));
        }
    }

    #[test]
    fn solve_is_correct_or_inconsistent(m in matrix(4, 4), seed in any::<u64>()) {
        let p = m.field().modulus();
        let b: Vec<u32> = (0..m.rows()).map(|i| ((seed >> (8 * i)) % p as u64) as u32).collect();
        match m.solve(&b) {
            Some(x) => prop_assert_eq!(m.mul_vec(&x), b),
            None => {
                let columns = Subspace::from_matrix_rows(&m.transpose());
                prop_assert!(!columns.contains(&b));
            }
        }
    }

    #[test]
    fn inverse_when_full_rank(m in matrix(4, 4)) {
        if m.is_square() {
            match m.inverse() {
                Some(inv) => prop_assert_eq!(m.mul(&inv), Matrix::identity(m.field(), m.rows())),
                None => prop_assert!(m.rank() < m.rows()),
            }
        }
    }

    #[test]
    fn dimension_formula(f in 0..2usize, n in 1..=4usize, a in prop::collection::vec(any::<u32>(), 0..16), b in prop::collection::vec(any::<u32>(), 0..16)) {
        let fld = field(f);
        let p = fld.modulus();
        let vecs = |raw: &[u32]| -> Vec<Vec<u32>> {
            raw.chunks(n).filter(|c| c.len() == n).map(|c| c.iter().map(|x| x % p).collect()).collect()
        };
        let u = Subspace::span(fld, n, &vecs(&a));
        let v = Subspace::span(fld, n, &vecs(&b));
        let sum = u.sum(&v);
        let meet = u.intersect(&v);
        prop_assert_eq!(u.dim() + v.dim(), sum.dim() + meet.dim());
        prop_assert_eq!(u.sum(&u), u.clone());
        prop_assert_eq!(u.intersect(&u), u.clone());
        prop_assert!(meet.is_subspace_of(&u) && meet.is_subspace_of(&v));
        prop_assert!(u.is_subspace_of(&sum) && v.is_subspace_of(&sum));
        // enumeration: the intersection is exactly the common vectors
        let common: Vec<Vec<u32>> = members(&u).into_iter().filter(|x| v.contains(x)).collect();
        prop_assert_eq!(common, members(&meet));
    }
}

#[test]
fn worked_examples() {
    let f2 = field(0);
    let id = Matrix::identity(f2, 3);
    assert_eq!(id.rref().matrix, id);
    assert_eq!(id.rank(), 3);
    assert!(id.kernel().is_zero());
    let z = Matrix::zeros(f2, 2, 4);
    assert_eq!(z.rref().rank, 0);
    assert!(Matrix::zeros(field(1), 2, 2).kernel().is_full());

    let m = Matrix::from_rows(f2, 2, &[[1u32, 1], [1, 1]]);
    let r = m.rref();
    assert_eq!(r.rank, 1);
    assert_eq!(r.matrix.row(0), &[1, 1]);
    assert_eq!(members(&Subspace::from_matrix_rows(&m)), vec![vec![0, 0], vec![1, 1]]);

    let k = Matrix::from_rows(f2, 3, &[[1u32, 1, 0], [0, 0, 1]]).kernel();
    assert_eq!(k, Subspace::span(f2, 3, &[[1u32, 1, 0]]));

    assert_eq!(Matrix::identity(f2, 2).solve(&[1, 0]), Some(vec![1, 0]));
    assert_eq!(Matrix::zeros(f2, 2, 2).solve(&[1, 0]), None);

    let e = |i: usize| {
        let mut v = vec![0u32; 4];
        v[i] = 1;
        v
    };
    let u = Subspace::span(f2, 4, &[e(0), e(1)]);
    let v = Subspace::span(f2, 4, &[e(2), e(3)]);
    assert!(u.intersect(&v).is_zero());
    assert!(u.sum(&v).is_full());
}
