//! Short names for indecomposable modules.

use domtilt::repmod::{decompose, is_isomorphic_indecomposable, trace_space, Module, ModuleEnv};

/// Named modules from the file, then the standard families. Every match is
/// kept, so a projective-injective reads `P(1)=I(4)`.
fn catalogue(env: &ModuleEnv) -> Vec<(String, Module)> {
    let alg = env.algebra();
    let q = alg.quiver();
    let n = alg.num_vertices();
    let mut out = Vec::new();
    for name in env.names() {
        let m = env.get(name).expect("listed name");
        let parts = decompose(m).multiplicities();
        if parts.len() == 1 && parts[0].1 == 1 {
            out.push((name.clone(), m.clone()));
        }
    }
    let p: Vec<Module> = (0..n).map(|v| Module::projective(alg, v)).collect();
    let i: Vec<Module> = (0..n).map(|v| Module::injective(alg, v)).collect();
    for v in 0..n {
        out.push((format!("P({})", q.label(v)), p[v].clone()));
    }
    for v in 0..n {
        out.push((format!("I({})", q.label(v)), i[v].clone()));
    }
    for v in 0..n {
        out.push((format!("S({})", q.label(v)), Module::simple(alg, v)));
    }
    for v in 0..n {
        for w in (0..n).filter(|&w| w != v) {
            let t = trace_space(&p[w], &p[v]);
            if t.dim() > 0 && t.dims() == p[w].dims() {
                out.push((format!("P({})/P({})", q.label(v), q.label(w)), p[v].quotient(&t).0));
            }
        }
    }
    for v in 0..n {
        out.push((format!("I({l})/S({l})", l = q.label(v)), i[v].quotient(&i[v].socle_space()).0));
        out.push((format!("rad P({})", q.label(v)), p[v].radical().module));
    }
    out
}

pub struct Namer {
    catalogue: Vec<(String, Module)>,
}

impl Namer {
    pub fn new(env: &ModuleEnv) -> Namer {
        Namer { catalogue: catalogue(env) }
    }

    pub fn name(&self, x: &Module) -> String {
        let hits: Vec<&str> = self
            .catalogue
            .iter()
            .filter(|(_, m)| !m.is_zero() && m.dims() == x.dims())
            .filter(|(_, m)| is_isomorphic_indecomposable(m, x))
            .map(|(n, _)| n.as_str())
            .collect();
        match hits.as_slice() {
            [] => format!("M{:?}", x.dims()),
            // Plain P/I/S names and file names, else the first quotient name.
            _ => {
                let plain: Vec<&str> = hits.iter().copied().filter(|h| !h.contains('/') && !h.starts_with("rad")).collect();
                if plain.is_empty() {
                    hits[0].to_string()
                } else {
                    plain.join("=")
                }
            }
        }
    }

    /// Indecomposable summands with multiplicities, in decomposition order.
    pub fn summands(&self, m: &Module) -> Vec<Summand> {
        decompose(m)
            .multiplicities()
            .into_iter()
            .map(|(x, k)| Summand { name: self.name(&x), dims: x.dims().to_vec(), multiplicity: k })
            .collect()
    }
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct Summand {
    pub name: String,
    pub dims: Vec<usize>,
    pub multiplicity: usize,
}

pub fn render(s: &[Summand]) -> String {
    if s.is_empty() {
        return "0".into();
    }
    s.iter()
        .map(|x| if x.multiplicity == 1 { x.name.clone() } else { format!("{}^{}", x.name, x.multiplicity) })
        .collect::<Vec<_>>()
        .join(" + ")
}
