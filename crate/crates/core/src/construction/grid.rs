use crate::error::ConstructionError;
use crate::lattice::PlanarLattice;

/// The grid `C_p × C_q` with its product embedding.
///
/// Element `(i, j)` (with `i < p`, `j < q`) gets id `i * q + j`. Moving along `j` goes up
/// and to the left, moving along `i` goes up and to the right, so `c_l = (0, q - 1)` and
/// `c_r = (p - 1, 0)`, with `[c_l, 1] ≅ C_p` and `[c_r, 1] ≅ C_q`.
pub fn make_grid(p: usize, q: usize) -> Result<PlanarLattice, ConstructionError> {
    if p < 2 || q < 2 {
        return Err(ConstructionError::BadDims { p, q });
    }
    let id = |i: usize, j: usize| i * q + j;
    let mut up = vec![Vec::new(); p * q];
    let mut down = vec![Vec::new(); p * q];
    for i in 0..p {
        for j in 0..q {
            let x = id(i, j);
            if j + 1 < q {
                up[x].push(id(i, j + 1));
            }
            if i + 1 < p {
                up[x].push(id(i + 1, j));
            }
            if i > 0 {
                down[x].push(id(i - 1, j));
            }
            if j > 0 {
                down[x].push(id(i, j - 1));
            }
        }
    }
    Ok(PlanarLattice::build_diagram(up, down)?)
}
