//! Assembling the cells of disconnected components: which shell lies inside
//! which, and which cell of the outer component hosts each inner shell.

mod raycast;

pub use raycast::{Hits, RayCaster};

use crate::chain::Chain;
use crate::error::{Error, Result};
use crate::giftwrap::Skeleton;
use crate::spatial::{Aabb, IntervalIndex};

/// How nested components combine into the final cells.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum NestingRule {
    /// Every bounded region of the arrangement becomes a cell. A cell that
    /// hosts inner components gets their shells as extra boundary (holes).
    #[default]
    Arrangement,
    /// Nesting depth alternates solid and void: components at odd depth are
    /// holes and their bounded cells are dropped.
    Parity,
}

/// Containment structure of the components of an extracted skeleton.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ShellReport {
    /// Component of every facet.
    pub facet_component: Vec<usize>,
    /// Component of every extracted cell.
    pub cell_component: Vec<usize>,
    /// Index (into the extracted cells) of the outer cell of each component.
    pub exterior_cell: Vec<usize>,
    /// `containment[i][j]`: shell `i` lies inside shell `j`.
    pub containment: Vec<Vec<bool>>,
    /// Transitive reduction of `containment`.
    pub reduced: Vec<Vec<bool>>,
    pub depth: Vec<usize>,
    pub parent: Vec<Option<usize>>,
    /// Extracted cell of the parent component that contains each shell.
    pub container_cell: Vec<Option<usize>>,
}

impl ShellReport {
    pub fn n_shells(&self) -> usize {
        self.exterior_cell.len()
    }

    /// The relation as rows of 0/1 digits.
    pub fn format_matrix(m: &[Vec<bool>]) -> String {
        m.iter()
            .map(|r| {
                r.iter()
                    .map(|&b| if b { "1" } else { "0" })
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

/// Final d-cells of an arrangement together with its outer boundary.
#[derive(Debug, Clone, PartialEq)]
pub struct Assembly {
    /// Bounded d-cells as outward-oriented facet chains.
    pub cells: Vec<Chain>,
    /// Extracted cell each final cell comes from.
    pub origin: Vec<usize>,
    /// Outer boundary of the whole arrangement, oriented like an exterior
    /// cell (negative volume).
    pub exterior: Chain,
    pub report: ShellReport,
}

/// Shell `i` in `j` for every ordered pair, by ray parity from a vertex of
/// shell `i`.
pub fn containment(
    skeleton: &Skeleton,
    caster: &RayCaster,
    shells: &[Chain],
) -> Result<Vec<Vec<bool>>> {
    let k = shells.len();
    let facet_lists: Vec<Vec<usize>> = shells.iter().map(|s| s.support().collect()).collect();
    let boxes: Vec<Aabb> = facet_lists
        .iter()
        .map(|fs| Aabb::of_cell(&skeleton.vertices, &skeleton.facet_vertices(fs.iter().copied())))
        .collect();
    let vertex_sets: Vec<Vec<usize>> = facet_lists
        .iter()
        .map(|fs| skeleton.facet_vertices(fs.iter().copied()))
        .collect();
    let index = IntervalIndex::new(boxes.clone())?;
    let mut r = vec![vec![false; k]; k];
    for i in 0..k {
        for j in index.query(&boxes[i]) {
            if i == j || !encloses(&boxes[j], &boxes[i]) {
                continue;
            }
            let probe = probe_vertex(skeleton, &vertex_sets[i], &vertex_sets[j]);
            r[i][j] = caster.inside(&probe, &facet_lists[j])?;
        }
    }
    Ok(r)
}

fn encloses(outer: &Aabb, inner: &Aabb) -> bool {
    outer.lo.iter().zip(&inner.lo).all(|(a, b)| a <= b) && outer.hi.iter().zip(&inner.hi).all(|(a, b)| a >= b)
}

/// A vertex of `shell` that is not a vertex of `other` (shells may touch
/// at isolated vertices), as coordinates.
fn probe_vertex(skeleton: &Skeleton, shell: &[usize], other: &[usize]) -> Vec<f64> {
    let v = shell
        .iter()
        .copied()
        .find(|v| other.binary_search(v).is_err())
        .unwrap_or(shell[0]);
    skeleton.vertices.point(v).to_vec()
}

/// Reduced relation, depth and parent of every shell.
pub type Reduction = (Vec<Vec<bool>>, Vec<usize>, Vec<Option<usize>>);

/// Transitive reduction of a strict nesting order, with depths and parents.
pub fn transitive_reduction(r: &[Vec<bool>]) -> Result<Reduction> {
    let k = r.len();
    let depth: Vec<usize> = r.iter().map(|row| row.iter().filter(|&&b| b).count()).collect();
    let mut reduced = vec![vec![false; k]; k];
    let mut parent = vec![None; k];
    for i in 0..k {
        if depth[i] == 0 {
            continue;
        }
        let candidates: Vec<usize> = (0..k)
            .filter(|&j| r[i][j] && depth[j] + 1 == depth[i])
            .collect();
        if candidates.len() != 1 {
            return Err(Error::InconsistentContainment(format!(
                "shell {i} has {} immediate containers",
                candidates.len()
            )));
        }
        let j = candidates[0];
        if (0..k).any(|m| r[j][m] && !r[i][m]) {
            return Err(Error::InconsistentContainment(format!(
                "containment of shell {i} is not transitive"
            )));
        }
        parent[i] = Some(j);
        reduced[i][j] = true;
    }
    Ok((reduced, depth, parent))
}

/// Splits extracted cells by component and nests the components.
pub fn assemble(
    skeleton: &Skeleton,
    extracted: &[Chain],
    rule: NestingRule,
    tol: f64,
) -> Result<Assembly> {
    let facet_component = skeleton.components();
    let n_comp = facet_component.iter().copied().max().map_or(0, |m| m + 1);
    let cell_component: Vec<usize> = extracted
        .iter()
        .map(|c| {
            c.support()
                .next()
                .map(|f| facet_component[f])
                .ok_or_else(|| Error::MalformedSkeleton("empty cell".into()))
        })
        .collect::<Result<_>>()?;
    let volumes: Vec<f64> = extracted
        .iter()
        .map(|c| skeleton.signed_volume(c))
        .collect::<Result<_>>()?;
    let mut exterior_cell = vec![usize::MAX; n_comp];
    for (i, &k) in cell_component.iter().enumerate() {
        if exterior_cell[k] == usize::MAX || volumes[i] < volumes[exterior_cell[k]] {
            exterior_cell[k] = i;
        }
    }
    if let Some(k) = exterior_cell.iter().position(|&e| e == usize::MAX) {
        return Err(Error::MalformedSkeleton(format!("component {k} has no cells")));
    }
    let shells: Vec<Chain> = exterior_cell.iter().map(|&e| extracted[e].neg()).collect();
    let caster = RayCaster::new(skeleton, tol)?;
    let r = containment(skeleton, &caster, &shells)?;
    let (reduced, depth, parent) = transitive_reduction(&r)?;

    let mut facet_cells: Vec<Vec<(usize, i8)>> = vec![Vec::new(); skeleton.n_facets()];
    for (i, c) in extracted.iter().enumerate() {
        for (f, s) in c.iter() {
            facet_cells[f].push((i, s));
        }
    }
    let mut component_facets: Vec<Vec<usize>> = vec![Vec::new(); n_comp];
    for (f, &k) in facet_component.iter().enumerate() {
        component_facets[k].push(f);
    }
    let mut container_cell = vec![None; n_comp];
    for i in 0..n_comp {
        let Some(j) = parent[i] else { continue };
        let facets = &component_facets[j];
        let probe = probe_vertex(
            skeleton,
            &skeleton.facet_vertices(shells[i].support()),
            &skeleton.facet_vertices(facets.iter().copied()),
        );
        let (dir, hits) = caster.cast(&probe, facets)?;
        let &(_, f) = hits.first().ok_or_else(|| {
            Error::InconsistentContainment(format!("shell {i} sees no facet of shell {j}"))
        })?;
        let host = facet_cells[f]
            .iter()
            .find(|&&(_, s)| caster.exits_through(f, s, &dir))
            .map(|&(c, _)| c)
            .ok_or_else(|| {
                Error::InconsistentContainment(format!("facet {f} has no cell facing shell {i}"))
            })?;
        if host == exterior_cell[j] {
            return Err(Error::InconsistentContainment(format!(
                "shell {i} lies outside component {j}"
            )));
        }
        container_cell[i] = Some(host);
    }

    let keep_component = |k: usize| rule == NestingRule::Arrangement || depth[k] % 2 == 0;
    let is_exterior: Vec<bool> = (0..extracted.len())
        .map(|i| exterior_cell[cell_component[i]] == i)
        .collect();
    let mut columns: Vec<Chain> = extracted.to_vec();
    for i in 0..n_comp {
        if let Some(host) = container_cell[i] {
            if keep_component(cell_component[host]) {
                for (f, s) in extracted[exterior_cell[i]].iter() {
                    columns[host].set(f, s);
                }
            }
        }
    }
    let mut cells = Vec::new();
    let mut origin = Vec::new();
    for (i, c) in columns.into_iter().enumerate() {
        if !is_exterior[i] && keep_component(cell_component[i]) {
            cells.push(c);
            origin.push(i);
        }
    }
    // Components own disjoint facets, so their outer cells just concatenate.
    let mut exterior = Chain::zero(extracted.first().map_or(0, Chain::dim));
    for k in (0..n_comp).filter(|&k| depth[k] == 0) {
        for (f, s) in extracted[exterior_cell[k]].iter() {
            exterior.set(f, s);
        }
    }
    Ok(Assembly {
        cells,
        origin,
        exterior,
        report: ShellReport {
            facet_component,
            cell_component,
            exterior_cell,
            containment: r,
            reduced,
            depth,
            parent,
            container_cell,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_of_chain_order() {
        // 0 in 1 in 2
        let r = vec![
            vec![false, true, true],
            vec![false, false, true],
            vec![false, false, false],
        ];
        let (red, depth, parent) = transitive_reduction(&r).unwrap();
        assert_eq!(depth, vec![2, 1, 0]);
        assert_eq!(parent, vec![Some(1), Some(2), None]);
        assert!(red[0][1] && !red[0][2] && red[1][2]);
    }

    #[test]
    fn reduction_rejects_overlap() {
        let r = vec![vec![false, true], vec![true, false]];
        assert!(transitive_reduction(&r).is_err());
    }
}
