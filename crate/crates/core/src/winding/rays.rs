use alloc::vec::Vec;

use crate::numkernel::ComplexVector;

/// Local factors grouped into rays (vectors equal up to phase).
#[derive(Debug, Clone, PartialEq)]
pub struct RayGroups {
    /// One unit representative per ray, in order of first appearance.
    pub reps: Vec<ComplexVector>,
    /// `assignment[i]` is the ray of input vector `i`.
    pub assignment: Vec<usize>,
}

/// Two unit vectors share a ray when `|<u|v>| >= 1 - tol`.
pub fn group_rays(vectors: &[&ComplexVector], tol: f64) -> RayGroups {
    let mut reps: Vec<ComplexVector> = Vec::new();
    let mut assignment = Vec::with_capacity(vectors.len());
    for v in vectors {
        match reps.iter().position(|r| r.inner(v).norm() >= 1.0 - tol) {
            Some(i) => assignment.push(i),
            None => {
                assignment.push(reps.len());
                reps.push((*v).clone());
            }
        }
    }
    RayGroups { reps, assignment }
}

impl RayGroups {
    pub fn mutually_orthogonal(&self, tol: f64) -> bool {
        self.reps
            .iter()
            .enumerate()
            .all(|(i, u)| self.reps[i + 1..].iter().all(|v| u.inner(v).norm() <= tol))
    }

    /// Connected components of the non-orthogonality graph on the rays,
    /// ordered by their smallest ray index.
    pub fn components(&self, tol: f64) -> Vec<Vec<usize>> {
        let n = self.reps.len();
        let mut component = alloc::vec![usize::MAX; n];
        let mut out: Vec<Vec<usize>> = Vec::new();
        for start in 0..n {
            if component[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = alloc::vec![start];
            component[start] = id;
            let mut cursor = 0;
            while cursor < members.len() {
                let u = members[cursor];
                for (v, slot) in component.iter_mut().enumerate() {
                    if *slot == usize::MAX && self.reps[u].inner(&self.reps[v]).norm() > tol {
                        *slot = id;
                        members.push(v);
                    }
                }
                cursor += 1;
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// Orthonormal bases of the spans of every nonempty union of components
    /// except the union of all of them, in bitmask order.
    pub fn component_spans(&self, tol: f64) -> Vec<Vec<ComplexVector>> {
        let spans: Vec<Vec<ComplexVector>> = self
            .components(tol)
            .iter()
            .map(|members| span_basis(members.iter().map(|&i| &self.reps[i])))
            .collect();
        let c = spans.len();
        // More components than this never occur at the dimensions in use.
        let c = c.min(16);
        let full = (1u32 << c) - 1;
        (1..full)
            .map(|mask| {
                (0..c)
                    .filter(|k| mask & (1 << k) != 0)
                    .flat_map(|k| spans[k].iter().cloned())
                    .collect()
            })
            .collect()
    }
}

/// Orthonormal basis of the span, dropping numerically dependent vectors.
pub(crate) fn span_basis<'a>(
    vectors: impl IntoIterator<Item = &'a ComplexVector>,
) -> Vec<ComplexVector> {
    let mut out: Vec<ComplexVector> = Vec::new();
    for v in vectors {
        let mut w = v.clone();
        for _ in 0..2 {
            for q in &out {
                let proj = q.inner(&w);
                w.axpy(-proj, q);
            }
        }
        if w.norm() > 1e-8 {
            out.push(w.normalized().expect("nonzero"));
        }
    }
    out
}
