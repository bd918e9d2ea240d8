//! Search for an involutory outer automorphism of a small group, and the
//! twisted two-block action of the resulting split extension.

use super::Construction;
use crate::permcore::{ElementSet, FiniteGroup, Permutation, StabChain, DEFAULT_CAP};

/// Extends `x -> x2, y -> y2` along the Cayley graph of `<x, y>`. Returns the
/// image index of every element, or `None` if the assignment is not a
/// well-defined bijective homomorphism.
fn extend_hom(elements: &ElementSet, gens: [&Permutation; 2], images: [&Permutation; 2]) -> Option<Vec<u32>> {
    let n = elements.len();
    let id = elements.position(Permutation::identity(elements.degree()).images())?;
    let mut map = vec![u32::MAX; n];
    map[id] = id as u32;
    let mut queue = vec![id];
    let mut head = 0;
    while head < queue.len() {
        let w = queue[head];
        head += 1;
        let pw = elements.permutation(w);
        let qw = elements.permutation(map[w] as usize);
        for (g, h) in gens.iter().zip(images.iter()) {
            let a = elements.position(pw.then(g).images())?;
            let b = elements.position(qw.then(h).images())? as u32;
            if map[a] == u32::MAX {
                map[a] = b;
                queue.push(a);
            } else if map[a] != b {
                return None;
            }
        }
    }
    if queue.len() != n {
        return None;
    }
    let mut hit = vec![false; n];
    for &m in &map {
        if std::mem::replace(&mut hit[m as usize], true) {
            return None;
        }
    }
    Some(map)
}

/// Finds an automorphism of `group` of order two that is not inner, by
/// mapping an element to a non-conjugate element of the same order and class
/// size. Returns the images of `group.generators()`, or `None` if no such
/// automorphism is found.
pub fn find_outer_involution(group: &FiniteGroup) -> Option<Vec<Permutation>> {
    let elements = group.elements(DEFAULT_CAP).ok()?;
    let classes = group.classes(DEFAULT_CAP).ok()?;
    let order = group.order_exact();
    let degree = group.degree();
    let class_of = |p: &Permutation| classes.class_of(elements.position(p.images()).unwrap());

    // Pick x of maximal order whose class has a twin of equal size and order.
    let reps = classes.representatives();
    let twins = |c: usize| -> Vec<usize> {
        (0..reps.len())
            .filter(|&d| d != c && reps[d].order() == reps[c].order() && classes.sizes()[d] == classes.sizes()[c])
            .collect()
    };
    let mut candidates: Vec<usize> = (0..reps.len()).filter(|&c| !twins(c).is_empty()).collect();
    candidates.sort_by_key(|&c| std::cmp::Reverse(reps[c].order()));
    let x_class = *candidates.first()?;
    let x = reps[x_class].clone();

    let involutions: Vec<Permutation> = (0..elements.len())
        .map(|i| elements.permutation(i))
        .filter(|p| p.order() == 2)
        .collect();
    let y = involutions
        .iter()
        .find(|y| StabChain::new(degree, &[x.clone(), (*y).clone()]).order() == order)?
        .clone();
    let word_orders = |a: &Permutation, b: &Permutation| -> [u64; 3] {
        let ab = a.then(b);
        [
            ab.order(),
            ab.then(a).then(b).then(b).order(),
            a.then(a).then(b).order(),
        ]
    };
    let target = word_orders(&x, &y);

    for twin in twins(x_class) {
        let x2 = &reps[twin];
        for y2 in &involutions {
            if classes.sizes()[class_of(y2)] != classes.sizes()[class_of(&y)] {
                continue;
            }
            if word_orders(x2, y2) != target {
                continue;
            }
            let Some(phi) = extend_hom(elements, [&x, &y], [x2, y2]) else {
                continue;
            };
            // Not every outer coset contains an involution; keep looking if
            // this one does not.
            if let Some(images) = involution_in_coset(group, elements, &phi, &x, &y) {
                return Some(images);
            }
        }
    }
    None
}

/// Given an automorphism `phi` (as an index map), looks for `h` such that
/// `g -> h^-1 phi(g) h` is an involution, returning its generator images.
fn involution_in_coset(
    group: &FiniteGroup,
    elements: &ElementSet,
    phi: &[u32],
    x: &Permutation,
    y: &Permutation,
) -> Option<Vec<Permutation>> {
    let apply =
        |p: &Permutation| -> Permutation { elements.permutation(phi[elements.position(p.images()).unwrap()] as usize) };
    // phi^2 is inner, conjugation by some u; the twisted map squares to the
    // identity exactly when phi(h) h = u^-1.
    let (px, py) = (apply(&apply(x)), apply(&apply(y)));
    let u = (0..elements.len())
        .map(|i| elements.permutation(i))
        .find(|u| x.conjugate_by(u) == px && y.conjugate_by(u) == py)?;
    let u_inv = u.inverse();
    let h = (0..elements.len())
        .map(|i| elements.permutation(i))
        .find(|h| apply(h).then(h) == u_inv)?;
    let h_inv = h.inverse();
    Some(
        group
            .generators()
            .iter()
            .map(|g| h_inv.then(&apply(g)).then(&h))
            .collect(),
    )
}

/// The split extension `G:<sigma>` acting on two copies of the points of `G`:
/// `g` acts as `(g, sigma(g))` and the extra generator swaps the copies.
/// `sigma_images` are the images of `group.generators()` under an involutory
/// automorphism.
pub fn twisted_double(group: &FiniteGroup, sigma_images: &[Permutation]) -> Construction {
    let n = group.degree();
    let socle: Vec<Permutation> = group
        .generators()
        .iter()
        .zip(sigma_images)
        .map(|(g, s)| {
            let images = (0..2 * n)
                .map(|x| if x < n { g.image(x) } else { n + s.image(x - n) })
                .collect();
            Permutation::new(images).unwrap()
        })
        .collect();
    let swap = Permutation::new((0..2 * n).map(|x| (x + n) % (2 * n)).collect()).unwrap();
    let mut ambient = socle.clone();
    ambient.push(swap);
    Construction {
        degree: 2 * n,
        ambient,
        socle,
    }
}
