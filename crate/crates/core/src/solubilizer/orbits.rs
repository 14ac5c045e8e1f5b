//! Orbit counts for a group acting on a set of elements by conjugation.

use crate::error::{Error, Result};
use crate::group::{ElementSet, PermGroup};

fn check_invariant(h: &PermGroup, y: &ElementSet) -> Result<()> {
    let closed = y
        .iter()
        .all(|e| h.generators().iter().all(|s| y.contains(&e.conjugate_by(s))));
    if closed {
        Ok(())
    } else {
        Err(Error::NotInvariantSet)
    }
}

/// Number of orbits of `h` on `y`, found by walking each orbit.
pub fn orbit_count(h: &PermGroup, y: &ElementSet) -> Result<usize> {
    check_invariant(h, y)?;
    let mut seen = vec![false; y.len()];
    let mut orbits = 0;
    let mut stack = Vec::new();
    for start in 0..y.len() {
        if seen[start] {
            continue;
        }
        orbits += 1;
        seen[start] = true;
        stack.push(start);
        while let Some(i) = stack.pop() {
            let e = &y.as_slice()[i];
            for s in h.generators() {
                let j = y.position(&e.conjugate_by(s)).expect("checked invariant");
                if !seen[j] {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
    }
    Ok(orbits)
}

/// Number of orbits as the average number of fixed points over `h`.
pub fn burnside_orbit_count(h: &PermGroup, y: &ElementSet, cap: usize) -> Result<usize> {
    check_invariant(h, y)?;
    let elements = h.enumeration(cap)?;
    let sum: u128 = elements
        .elements
        .iter()
        .map(|g| y.iter().filter(|e| e.commutes_with(g)).count() as u128)
        .sum();
    let order = h.order();
    if !sum.is_multiple_of(order) {
        return Err(Error::BurnsideNonIntegral { sum, order });
    }
    Ok((sum / order) as usize)
}
