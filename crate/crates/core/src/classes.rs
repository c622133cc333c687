//! Conjugacy classes of `G(r,n)`, labelled by [`ClassType`].

use std::collections::HashSet;

use serde::Serialize;

use crate::colored_perm::{check_order, enumerate_group, ClassType, ColoredPermutation};
use crate::error::Result;
use crate::shapes::multipartitions;

/// Above this order classes come from the centralizer formula instead of orbits.
pub const BRUTE_FORCE_CLASS_LIMIT: u64 = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjugacyClass {
    pub class_type: ClassType,
    pub representative: ColoredPermutation,
    pub size: u64,
}

/// All class types of `G(r,n)`, in multipartition order.
pub fn class_types(r: usize, n: usize) -> Result<Vec<ClassType>> {
    multipartitions(r, n)?
        .into_iter()
        .map(|mp| ClassType::new(r, mp))
        .collect()
}

/// `r^n n! / Π_{k,a} m_{k,a}! (k r)^{m_{k,a}}`, with `m_{k,a}` the number of
/// cycles of length `k` and color `a`.
pub fn class_size(ct: &ClassType) -> u64 {
    let r = ct.r as u128;
    let mut order: u128 = 1;
    for k in 1..=ct.n as u128 {
        order = order.checked_mul(k * r).expect("group order overflow");
    }
    let mut centralizer: u128 = 1;
    for part in ct.by_color.components() {
        let parts = part.parts();
        let mut i = 0;
        while i < parts.len() {
            let k = parts[i];
            let m = parts[i..].iter().take_while(|&&p| p == k).count();
            for t in 1..=m as u128 {
                centralizer *= t * k as u128 * r;
            }
            i += m;
        }
    }
    debug_assert_eq!(order % centralizer, 0);
    u64::try_from(order / centralizer).expect("class size overflow")
}

/// Classes from the class-type enumeration and the centralizer formula.
pub fn conjugacy_classes_by_type(r: usize, n: usize) -> Result<Vec<ConjugacyClass>> {
    Ok(class_types(r, n)?
        .into_iter()
        .map(|ct| ConjugacyClass {
            representative: ct.representative(),
            size: class_size(&ct),
            class_type: ct,
        })
        .collect())
}

/// Classes as conjugation orbits of the whole group.
pub fn conjugacy_classes_bruteforce(r: usize, n: usize, max_order: u64) -> Result<Vec<ConjugacyClass>> {
    let elements: Vec<ColoredPermutation> = enumerate_group(r, n, max_order)?.collect();
    let mut seen: HashSet<ColoredPermutation> = HashSet::with_capacity(elements.len());
    let mut classes = Vec::new();
    for x in &elements {
        if seen.contains(x) {
            continue;
        }
        let mut size = 0u64;
        for h in &elements {
            if seen.insert(x.conjugate_by(h)?) {
                size += 1;
            }
        }
        let class_type = x.class_type();
        classes.push(ConjugacyClass {
            representative: class_type.representative(),
            class_type,
            size,
        });
    }
    let order = class_types(r, n)?;
    classes.sort_by_key(|c| order.iter().position(|t| *t == c.class_type));
    Ok(classes)
}

/// Orbits for small groups, the formula otherwise.
pub fn conjugacy_classes(r: usize, n: usize, max_order: u64) -> Result<Vec<ConjugacyClass>> {
    let order = check_order(r, n, max_order)?;
    if order <= BRUTE_FORCE_CLASS_LIMIT {
        conjugacy_classes_bruteforce(r, n, max_order)
    } else {
        conjugacy_classes_by_type(r, n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colored_perm::{group_order, simple_reflections};
    use crate::shapes::MultiPartition;

    #[test]
    fn class_size_examples() {
        let id = ColoredPermutation::identity(3, 3).class_type();
        assert_eq!(class_size(&id), 1);
        let s1 = simple_reflections(1, 2).unwrap()[1].class_type();
        assert_eq!(class_size(&s1), 1);
        let ct = ClassType::new(2, MultiPartition::from_parts(&[&[1], &[1]])).unwrap();
        assert_eq!(class_size(&ct), 2);
    }

    #[test]
    fn formula_matches_orbits() {
        for r in 1..=4 {
            for n in 0..=4 {
                if group_order(r, n).unwrap() > 2_000 {
                    continue;
                }
                let brute = conjugacy_classes_bruteforce(r, n, u64::MAX).unwrap();
                let formula = conjugacy_classes_by_type(r, n).unwrap();
                assert_eq!(brute, formula, "r={r} n={n}");
                let total: u64 = brute.iter().map(|c| c.size).sum();
                assert_eq!(total, group_order(r, n).unwrap());
            }
        }
    }

    #[test]
    fn g22_classes() {
        let classes = conjugacy_classes(2, 2, u64::MAX).unwrap();
        let sizes: Vec<u64> = classes.iter().map(|c| c.size).collect();
        // (2|-) (11|-) (1|1) (-|2) (-|11)
        assert_eq!(sizes, vec![2, 1, 2, 2, 1]);
    }
}
