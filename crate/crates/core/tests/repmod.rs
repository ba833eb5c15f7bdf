use std::sync::Arc;

use domtilt::exactla::{Field, Mat, Matrix, PrimeField};
use domtilt::fixtures;
use domtilt::pathalg::Algebra;
use domtilt::repmod::{decompose, hom_dim, hom_space, is_isomorphic, ModuleEnv, Module};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Hom(M, N) straight from the commuting squares: unknowns are all entries
/// of all vertex maps.
fn naive_hom(m: &Module, n: &Module) -> Vec<Vec<Matrix>> {
    let f = m.field();
    let q = m.algebra().quiver();
    let nv = m.dims().len();
    let mut off = vec![0];
    for v in 0..nv {
        off.push(off[v] + m.dims()[v] * n.dims()[v]);
    }
    let unknowns = off[nv];
    // Each equation is a column; the solutions form the left kernel.
    let mut cols: Vec<Vec<u32>> = Vec::new();
    for (ai, a) in q.arrows().iter().enumerate() {
        let (s, t) = (a.source, a.target);
        let (ma, na) = (m.map(ai), n.map(ai));
        for i in 0..m.dims()[s] {
            for j in 0..n.dims()[t] {
                // (M_a f_t)[i][j] - (f_s N_a)[i][j]
                let mut col = vec![0u32; unknowns];
                for k in 0..m.dims()[t] {
                    let x = off[t] + k * n.dims()[t] + j;
                    col[x] = f.add(&col[x], ma.get(i, k));
                }
                for k in 0..n.dims()[s] {
                    let x = off[s] + i * n.dims()[s] + k;
                    col[x] = f.sub(&col[x], na.get(k, j));
                }
                cols.push(col);
            }
        }
    }
    let sols = if cols.is_empty() {
        Mat::identity(&f, unknowns).entries().chunks(unknowns.max(1)).map(<[u32]>::to_vec).collect()
    } else {
        Mat::from_rows(&f, unknowns, cols).transpose().left_kernel_basis()
    };
    sols.into_iter()
        .take(if unknowns == 0 { 0 } else { usize::MAX })
        .map(|x| {
            (0..nv)
                .map(|v| {
                    let rows = x[off[v]..off[v + 1]].chunks(n.dims()[v].max(1)).map(<[u32]>::to_vec).collect();
                    if n.dims()[v] == 0 {
                        Mat::zeros(&f, m.dims()[v], 0)
                    } else {
                        Mat::from_rows(&f, n.dims()[v], rows)
                    }
                })
                .collect()
        })
        .collect()
}

/// Some random combination of the naive Hom basis is invertible.
fn naive_iso(m: &Module, n: &Module, rng: &mut ChaCha8Rng) -> bool {
    if m.dims() != n.dims() {
        return false;
    }
    let f = m.field();
    let basis = naive_hom(m, n);
    (0..4).any(|_| {
        let mut acc: Vec<Matrix> = m.dims().iter().map(|&d| Mat::zeros(&f, d, d)).collect();
        for b in &basis {
            let c = rng.gen_range(0..f.characteristic());
            for v in 0..acc.len() {
                acc[v] = acc[v].add(&b[v].scale(&c));
            }
        }
        acc.iter().all(|a| a.rank() == a.rows())
    })
}

fn pool(a: &Arc<Algebra>) -> Vec<Module> {
    let mut out = Vec::new();
    for i in 0..a.num_vertices() {
        out.push(Module::projective(a, i));
        out.push(Module::injective(a, i));
        out.push(Module::simple(a, i));
    }
    out
}

/// Pool members up to isomorphism, judged by the naive oracle.
fn distinct_pool(a: &Arc<Algebra>) -> Vec<Module> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut out: Vec<Module> = Vec::new();
    for m in pool(a) {
        if !out.iter().any(|x| naive_iso(x, &m, &mut rng)) {
            out.push(m);
        }
    }
    out
}

fn random_invertible(f: &PrimeField, d: usize, rng: &mut ChaCha8Rng) -> Matrix {
    loop {
        let rows = (0..d).map(|_| (0..d).map(|_| rng.gen_range(0..f.characteristic())).collect()).collect();
        let g = Mat::from_rows(f, d, rows);
        if g.rank() == d {
            return g;
        }
    }
}

/// Same module in a random basis at every vertex.
fn scramble(m: &Module, rng: &mut ChaCha8Rng) -> Module {
    let f = m.field();
    let a = m.algebra();
    let g: Vec<Matrix> = m.dims().iter().map(|&d| random_invertible(&f, d, rng)).collect();
    let maps = a
        .quiver()
        .arrows()
        .iter()
        .enumerate()
        .map(|(ai, ar)| g[ar.source].mul(m.map(ai)).mul(&g[ar.target].inverse().unwrap()))
        .collect();
    Module::new(a, m.dims().to_vec(), maps).unwrap()
}

#[test]
fn hom_matches_naive_oracle() {
    for name in ["e1", "e2", "e4", "a3", "aus_kx2", "e3_n4"] {
        let a = fixtures::algebra(name).unwrap();
        let ms = pool(&a);
        for m in &ms {
            for n in &ms {
                assert_eq!(hom_dim(m, n), naive_hom(m, n).len(), "{name} {:?} {:?}", m.dims(), n.dims());
            }
        }
    }
}

#[test]
fn hom_basis_is_natural_and_independent() {
    let a = fixtures::algebra("e1").unwrap();
    let m = Module::regular(&a);
    let n = Module::dual_regular(&a).plus(&Module::simple(&a, 1));
    let basis = hom_space(&m, &n);
    assert!(basis.iter().all(|g| g.is_natural()));
    let f = a.field();
    let rows: Vec<Vec<u32>> = basis.iter().map(|g| g.coords()).collect();
    let width = rows[0].len();
    assert_eq!(Mat::from_rows(&f, width, rows).rank(), basis.len());
}

#[test]
fn double_dual_is_isomorphic() {
    for (name, _) in fixtures::ALL {
        let a = fixtures::algebra(name).unwrap();
        for m in pool(&a) {
            let dd = m.dual().unwrap().dual().unwrap();
            let dd = Module::new(&a, dd.dims().to_vec(), dd.maps().to_vec()).unwrap();
            assert!(is_isomorphic(&m, &dd), "{name}");
        }
    }
}

#[test]
fn nakayama_adjunction_on_e1() {
    let a = fixtures::algebra("e1").unwrap();
    let file = fixtures::file("e1");
    let env = ModuleEnv::from_file(&a, &file).unwrap();
    let t = env.get("Q").unwrap();
    for i in 0..a.num_vertices() {
        let p = Module::projective(&a, i);
        assert_eq!(hom_dim(&p, t), hom_dim(t, &Module::injective(&a, i)));
        assert_eq!(hom_dim(&p, t), t.dims()[i]);
    }
}

#[test]
fn e1_module_x() {
    let a = fixtures::algebra("e1").unwrap();
    let env = ModuleEnv::from_file(&a, &fixtures::file("e1")).unwrap();
    let x = env.get("X").unwrap();
    // X = P(1)+P(5) modulo the image of P(2); P(2) has dims (0,1,0,1,1) and
    // maps injectively, so dims are those of P(1)+P(5) minus (0,1,0,1,1).
    let p1 = Module::projective(&a, 0).dims().to_vec();
    let p5 = Module::projective(&a, 4).dims().to_vec();
    let p2 = Module::projective(&a, 1).dims().to_vec();
    let want: Vec<usize> = (0..5).map(|v| p1[v] + p5[v] - p2[v]).collect();
    assert_eq!(x.dims(), want.as_slice());
    assert_eq!(x.dims(), &[1, 1, 1, 0, 1]);
    assert_eq!(decompose(x).summands.len(), 1);
    assert_eq!(x.top_dims(), vec![1, 0, 0, 0, 1]);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn krull_schmidt_on_scrambled_sums(
        fixture in prop::sample::select(vec!["e1", "e2", "e4", "a3", "aus_kx2"]),
        picks in prop::collection::vec(0usize..64, 1..5),
        seed in any::<u64>(),
    ) {
        let a = fixtures::algebra(fixture).unwrap();
        let pool = distinct_pool(&a);
        let idx: Vec<usize> = picks.iter().map(|p| p % pool.len()).collect();
        let parts: Vec<Module> = idx.iter().map(|&i| pool[i].clone()).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = scramble(&Module::direct_sum(&a, &parts), &mut rng);
        let d = decompose(&m);
        prop_assert!(d.verify());
        prop_assert_eq!(d.summands.len(), parts.len());
        let mut want: Vec<(usize, usize)> = Vec::new();
        for &i in &idx {
            match want.iter_mut().find(|(j, _)| *j == i) {
                Some(e) => e.1 += 1,
                None => want.push((i, 1)),
            }
        }
        prop_assert_eq!(d.num_classes(), want.len());
        for (rep, k) in d.multiplicities() {
            let hit = want.iter().find(|(i, _)| naive_iso(&pool[*i], &rep, &mut rng));
            prop_assert!(hit.is_some());
            prop_assert_eq!(hit.unwrap().1, k);
        }
    }
}
