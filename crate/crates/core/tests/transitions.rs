mod common;

use affstan::checks;
use affstan::enumerate::involutions;
use affstan::tau::tau;
use affstan::AffineInvolution;

fn range(y: &AffineInvolution) -> impl Iterator<Item = (i64, i64)> {
    let n = y.n() as i64;
    let reach = 2 * y.perm().max_displacement() + 3 * n;
    (1..=n).flat_map(move |i| (i + 1..=i + reach).filter(move |j| (j - i) % n != 0).map(move |j| (i, j)))
}

#[test]
fn tau_is_weakly_increasing() {
    for n in 2..=4 {
        for y in involutions(n, 3) {
            let nn = n as i64;
            for (i, j) in range(&y).filter(|&(i, j)| j - i <= 2 * nn) {
                let z = tau(&y, i, j).unwrap();
                assert!(y.perm().bruhat_leq(z.perm()), "{y} τ({i},{j}) = {z}");
            }
        }
    }
}

#[test]
fn equal_images_come_from_related_pairs() {
    for n in 2..=4 {
        for y in involutions(n, 3) {
            let nn = n as i64;
            let pairs: Vec<_> = range(&y).collect();
            for &(i, j) in &pairs {
                let z = tau(&y, i, j).unwrap();
                if z == y {
                    continue;
                }
                for &(k0, l0) in &pairs {
                    // compare against every translate of (k, l)
                    for shift in -3..=3 {
                        let (k, l) = (k0 + shift * nn, l0 + shift * nn);
                        if tau(&y, k, l).unwrap() != z {
                            continue;
                        }
                        let ok = (-6..=6).any(|m| {
                            [i, y.apply(i)].contains(&(k + m * nn)) && [j, y.apply(j)].contains(&(l + m * nn))
                        });
                        assert!(ok, "{y}: τ({i},{j}) = τ({k},{l})");
                    }
                }
            }
        }
    }
}

#[test]
fn length_lemma() {
    for n in 2..=4 {
        for y in involutions(n, 4) {
            for (i, j) in range(&y) {
                let z = tau(&y, i, j).unwrap();
                let nn = n as i64;
                let (yi, yj) = (y.apply(i), y.apply(j));
                if z == y || (i - yj).rem_euclid(nn) == 0 || !(yi <= i || j <= yj) {
                    continue;
                }
                let inv_cover = z.hat_length() == y.hat_length() + 1;
                let cover = y.perm().bruhat_cover(i, j).unwrap();
                assert_eq!(inv_cover, cover, "{y}, ({i},{j})");
            }
        }
    }
}

#[test]
fn theorem_suites_beyond_the_acceptance_scale() {
    for (n, h) in [(3, 6), (4, 5), (5, 4)] {
        for r in [
            checks::cover_equivalence(n, h).unwrap(),
            checks::covering_property(n, h).unwrap(),
            checks::involution_transitions(n, h).unwrap(),
            checks::phi_lemma(n, h).unwrap(),
            checks::code_identities(n, h).unwrap(),
        ] {
            assert!(r.passed(), "n={n} {}: {:?}", r.name, &r.failures[..1]);
        }
    }
}
