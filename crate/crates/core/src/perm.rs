//! Permutations of vertex sets and their cycle structure.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A bijection on `0..n`, stored as its image array.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Permutation {
    image: Vec<u8>,
}

impl Permutation {
    pub fn identity(n: usize) -> Permutation {
        Permutation { image: (0..n as u8).collect() }
    }

    /// Validates that `image` is a bijection on `0..image.len()`.
    pub fn from_images(image: &[usize]) -> Result<Permutation> {
        let n = image.len();
        if n > 256 {
            return Err(Error::TooManyVertices { n, cap: 256 });
        }
        let mut seen = vec![false; n];
        for &v in image {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::Precondition(format!("image {v} repeated; not a bijection")));
            }
        }
        Ok(Permutation { image: image.iter().map(|&v| v as u8).collect() })
    }

    /// Builds from disjoint cycles; unlisted points are fixed.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Permutation> {
        let mut image: Vec<usize> = (0..n).collect();
        let mut touched = vec![false; n];
        for cyc in cycles {
            for (i, &v) in cyc.iter().enumerate() {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                if std::mem::replace(&mut touched[v], true) {
                    return Err(Error::Precondition(format!("vertex {v} appears in two cycles")));
                }
                image[v] = cyc[(i + 1) % cyc.len()];
            }
        }
        Permutation::from_images(&image)
    }

    pub(crate) fn from_raw(image: Vec<u8>) -> Permutation {
        Permutation { image }
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    #[inline]
    pub fn apply(&self, v: usize) -> usize {
        self.image[v] as usize
    }

    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.image.iter().map(|&v| v as usize)
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &v)| i == v as usize)
    }

    /// `self ∘ other`: first `other`, then `self`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.len(), other.len());
        Permutation { image: other.image.iter().map(|&v| self.image[v as usize]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.len()];
        for (i, &v) in self.image.iter().enumerate() {
            inv[v as usize] = i as u8;
        }
        Permutation { image: inv }
    }

    /// Number of cycles, fixed points included.
    pub fn cycle_count(&self) -> usize {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut count = 0;
        for s in 0..n {
            if seen[s] {
                continue;
            }
            count += 1;
            let mut v = s;
            while !seen[v] {
                seen[v] = true;
                v = self.image[v] as usize;
            }
        }
        count
    }

    pub fn cycle_decomposition(&self) -> CycleDecomposition {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        let mut fixed_points = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut v = s;
            while !seen[v] {
                seen[v] = true;
                cyc.push(v);
                v = self.image[v] as usize;
            }
            if cyc.len() == 1 {
                fixed_points.push(s);
            } else {
                cycles.push(cyc);
            }
        }
        let cycle_count = cycles.len() + fixed_points.len();
        CycleDecomposition { cycles, fixed_points, cycle_count }
    }
}

/// Disjoint cycle form. Each cycle starts at its smallest vertex; cycles are
/// listed by that vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleDecomposition {
    pub cycles: Vec<Vec<usize>>,
    pub fixed_points: Vec<usize>,
    /// Nontrivial cycles plus fixed points.
    pub cycle_count: usize,
}

impl CycleDecomposition {
    pub fn to_permutation(&self) -> Permutation {
        let n = self.fixed_points.len() + self.cycles.iter().map(Vec::len).sum::<usize>();
        Permutation::from_cycles(n, &self.cycles).expect("decomposition is a partition")
    }
}
