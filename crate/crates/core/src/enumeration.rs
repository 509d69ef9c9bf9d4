//! Exhaustive enumeration of the nilpotent orbits of a classical algebra.

use crate::orbit::{ClassicalOrbit, LieType, Partition, VeryEvenLabel};

/// All partitions of `n` in lexicographically decreasing order.
#[derive(Debug, Clone)]
pub struct Partitions {
    current: Option<Vec<u32>>,
}

impl Partitions {
    pub fn new(n: u32) -> Self {
        Partitions {
            current: (n > 0).then(|| vec![n]),
        }
    }
}

impl Iterator for Partitions {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        let out = self.current.take()?;
        // Successor: drop trailing 1s, decrement the last part > 1, then
        // refill greedily with the released amount.
        let mut next = out.clone();
        let mut released = 0u32;
        while next.last() == Some(&1) {
            next.pop();
            released += 1;
        }
        if let Some(last) = next.last_mut() {
            *last -= 1;
            released += 1;
            let cap = *last;
            while released > 0 {
                let p = released.min(cap);
                next.push(p);
                released -= p;
            }
            self.current = Some(next);
        }
        Some(out)
    }
}

/// Every orbit of `lie_type`, in lexicographically decreasing partition
/// order. Very even partitions of `so_2n` are emitted twice, labelled `I`
/// then `II`.
#[derive(Debug, Clone)]
pub struct OrbitStream {
    lie_type: LieType,
    partitions: Partitions,
    pending: Option<ClassicalOrbit>,
}

impl OrbitStream {
    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }
}

impl Iterator for OrbitStream {
    type Item = ClassicalOrbit;

    fn next(&mut self) -> Option<ClassicalOrbit> {
        if let Some(second) = self.pending.take() {
            return Some(second);
        }
        for parts in self.partitions.by_ref() {
            let partition = Partition::new(parts).expect("generated partitions are well formed");
            if let Ok(orbit) = ClassicalOrbit::new(self.lie_type, partition, None) {
                if orbit.very_even_label().is_some() {
                    self.pending = Some(orbit.relabeled(VeryEvenLabel::II));
                }
                return Some(orbit);
            }
        }
        None
    }
}

pub fn enumerate_orbits(lie_type: LieType) -> OrbitStream {
    OrbitStream {
        lie_type,
        partitions: Partitions::new(lie_type.m()),
        pending: None,
    }
}

pub fn count_orbits(lie_type: LieType) -> usize {
    enumerate_orbits(lie_type).count()
}

/// Every classical type with `2 ≤ m ≤ max_m` (plus `sl_1`), ordered by `m`
/// then family.
pub fn classical_types_up_to(max_m: u32) -> Vec<LieType> {
    use crate::orbit::Family;
    let mut out = Vec::new();
    for m in 1..=max_m {
        for family in [Family::Sl, Family::Sp, Family::SoOdd, Family::SoEven] {
            if let Ok(t) = LieType::new(family, m) {
                out.push(t);
            }
        }
    }
    out
}
