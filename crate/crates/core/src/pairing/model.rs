use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exact::matchings_count;
use crate::{Error, Result};

use super::graph::Multigraph;
use super::Caps;

/// A perfect matching of the `dn` points `0..dn`, where point `p` lives in
/// cell `p / d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Pairing {
    n: usize,
    d: usize,
    mate: Vec<usize>,
}

fn check_shape(n: usize, d: usize) -> Result<()> {
    if n == 0 || d == 0 {
        return Err(Error::InvalidInput(format!("need n >= 1 and d >= 1 (n = {n}, d = {d})")));
    }
    if (n * d) % 2 != 0 {
        return Err(Error::Parity(format!("dn = {} is odd, so no pairing exists", n * d)));
    }
    Ok(())
}

impl Pairing {
    /// Builds a pairing from an explicit mate table.
    pub fn from_mate(n: usize, d: usize, mate: Vec<usize>) -> Result<Self> {
        check_shape(n, d)?;
        if mate.len() != n * d {
            return Err(Error::InvalidInput(format!("mate table has {} entries, expected {}", mate.len(), n * d)));
        }
        for (p, &q) in mate.iter().enumerate() {
            if q >= mate.len() || q == p || mate[q] != p {
                return Err(Error::InvalidInput(format!("mate table is not a fixed-point-free involution at {p}")));
            }
        }
        Ok(Self { n, d, mate })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn mate(&self, p: usize) -> usize {
        self.mate[p]
    }

    pub fn mates(&self) -> &[usize] {
        &self.mate
    }

    pub fn cell(&self, p: usize) -> usize {
        p / self.d
    }

    /// Each pair once, as `(p, mate(p))` with `p < mate(p)`.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.mate.iter().enumerate().filter(|(p, q)| p < q).map(|(p, &q)| (p, q))
    }

    /// Collapses every cell to a vertex.
    pub fn project(&self) -> Multigraph {
        let edges = self.pairs().map(|(p, q)| (self.cell(p), self.cell(q))).collect();
        Multigraph::from_edges_unchecked(self.n, edges)
    }
}

/// A uniform pairing drawn from `rng`: shuffle the points, then pair them
/// consecutively.
pub fn sample_pairing_with<R: Rng + ?Sized>(n: usize, d: usize, rng: &mut R) -> Result<Pairing> {
    check_shape(n, d)?;
    let mut points: Vec<usize> = (0..n * d).collect();
    points.shuffle(rng);
    let mut mate = vec![0; n * d];
    for pair in points.chunks_exact(2) {
        mate[pair[0]] = pair[1];
        mate[pair[1]] = pair[0];
    }
    Ok(Pairing { n, d, mate })
}

/// A uniform pairing, fully determined by `seed`.
pub fn sample_pairing(n: usize, d: usize, seed: u64) -> Result<Pairing> {
    sample_pairing_with(n, d, &mut ChaCha8Rng::seed_from_u64(seed))
}

/// The generator for replica `index` under `seed`: an independent ChaCha
/// stream, so replica results do not depend on how work is split.
pub fn replica_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

const UNMATCHED: usize = usize::MAX;

/// Every pairing of `dn` points, each once. The smallest unmatched point is
/// paired with each later unmatched point in turn, depth first.
pub struct PairingEnumerator {
    n: usize,
    d: usize,
    mate: Vec<usize>,
    stack: Vec<(usize, usize)>,
    started: bool,
}

impl PairingEnumerator {
    fn first_unmatched_from(&self, from: usize) -> Option<usize> {
        (from..self.mate.len()).find(|&p| self.mate[p] == UNMATCHED)
    }

    fn link(&mut self, p: usize, q: usize) {
        self.mate[p] = q;
        self.mate[q] = p;
        self.stack.push((p, q));
    }

    fn complete(&mut self) {
        while let Some(p) = self.first_unmatched_from(0) {
            let q = self.first_unmatched_from(p + 1).expect("even number of points");
            self.link(p, q);
        }
    }

    fn current(&self) -> Pairing {
        Pairing { n: self.n, d: self.d, mate: self.mate.clone() }
    }
}

impl Iterator for PairingEnumerator {
    type Item = Pairing;

    fn next(&mut self) -> Option<Pairing> {
        if !self.started {
            self.started = true;
            self.complete();
            return Some(self.current());
        }
        while let Some((p, q)) = self.stack.pop() {
            self.mate[p] = UNMATCHED;
            self.mate[q] = UNMATCHED;
            if let Some(next) = self.first_unmatched_from(q + 1) {
                self.link(p, next);
                self.complete();
                return Some(self.current());
            }
        }
        None
    }
}

/// Streams all `M(dn)` pairings, refusing when that exceeds `caps.pairings`.
pub fn enumerate_pairings(n: usize, d: usize, caps: &Caps) -> Result<PairingEnumerator> {
    check_shape(n, d)?;
    let total = matchings_count((n * d) as u64)?;
    if total > BigUint::from(caps.pairings) {
        return Err(Error::CapExceeded {
            what: "pairing enumeration",
            required: total.to_string(),
            cap: caps.pairings.to_string(),
        });
    }
    Ok(PairingEnumerator { n, d, mate: vec![UNMATCHED; n * d], stack: Vec::new(), started: false })
}
