use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_traits::ToPrimitive;

use super::{partitions_of, rim_hooks, z_of, Partition};
use crate::algebra::scalar::{rat_to_string, Rational};
use crate::error::{Error, Result};

type Memo = RwLock<HashMap<(Partition, Partition), i64>>;

fn memo() -> &'static Memo {
    static TABLE: OnceLock<Memo> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// `chi^mu(lambda)` by the Murnaghan-Nakayama rule.
pub fn character(mu: &Partition, lambda: &Partition) -> Result<i64> {
    if mu.size() != lambda.size() {
        return Err(Error::SizeMismatch(mu.size(), lambda.size()));
    }
    Ok(mn(mu, lambda))
}

fn mn(mu: &Partition, lambda: &Partition) -> i64 {
    if mu.is_empty() {
        return 1;
    }
    let key = (mu.clone(), lambda.clone());
    if let Some(&v) = memo().read().unwrap().get(&key) {
        return v;
    }
    let r = lambda.part(0);
    let rest = lambda.without_part(r).unwrap();
    let v = rim_hooks(mu, r)
        .iter()
        .map(|h| {
            let s = if h.height % 2 == 1 { 1 } else { -1 };
            s * mn(&h.remainder, &rest)
        })
        .sum();
    memo().write().unwrap().insert(key, v);
    v
}

/// Both sides of the rim-hook pairing identity:
/// the character sum `sum_lambda chi^mu chi^nu r m_r(lambda) / z(lambda)` and
/// the signed count of hook pairs with equal remainders.
pub fn theta_sides(mu: &Partition, nu: &Partition, r: usize) -> Result<(Rational, i64)> {
    if mu.size() != nu.size() {
        return Err(Error::SizeMismatch(mu.size(), nu.size()));
    }
    let mut chars = Rational::from_integer(0.into());
    for lambda in partitions_of(mu.size()) {
        let m = lambda.multiplicity(r);
        if m == 0 {
            continue;
        }
        let c = mn(mu, &lambda) * mn(nu, &lambda) * (r * m) as i64;
        chars += Rational::from_integer(c.into()) / z_of(&lambda);
    }
    let hn = rim_hooks(nu, r);
    let mut hooks = 0;
    for g in rim_hooks(mu, r) {
        for h in hn.iter().filter(|h| h.remainder == g.remainder) {
            hooks += if (g.height + h.height) % 2 == 0 { 1 } else { -1 };
        }
    }
    Ok((chars, hooks))
}

/// `theta_r(mu, nu)`, checked on both sides.
pub fn theta(mu: &Partition, nu: &Partition, r: usize) -> Result<i64> {
    let (chars, hooks) = theta_sides(mu, nu, r)?;
    let agree = chars.is_integer() && chars.to_integer().to_i64() == Some(hooks);
    if !agree {
        return Err(Error::ThetaMismatch {
            mu: mu.clone(),
            nu: nu.clone(),
            r,
            characters: rat_to_string(&chars),
            hooks: hooks.to_string(),
        });
    }
    Ok(hooks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::dim_of;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn small_tables() {
        assert_eq!(character(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(), 2);
        assert_eq!(character(&p(&[2, 1]), &p(&[2, 1])).unwrap(), 0);
        assert_eq!(character(&p(&[2, 1]), &p(&[3])).unwrap(), -1);
        assert_eq!(character(&p(&[2, 2]), &p(&[2, 2])).unwrap(), 2);
        assert!(matches!(
            character(&p(&[2]), &p(&[1])),
            Err(Error::SizeMismatch(2, 1))
        ));
    }

    #[test]
    fn hooks_on_the_long_cycle() {
        for d in 1..=8 {
            let cyc = Partition::row(d);
            for a in 0..d {
                let expect = if (d - 1 - a) % 2 == 0 { 1 } else { -1 };
                assert_eq!(character(&Partition::hook(a, d), &cyc).unwrap(), expect);
            }
            for mu in partitions_of(d) {
                assert_eq!(character(&Partition::row(d), &mu).unwrap(), 1);
                let c = character(&mu, &Partition::column(d)).unwrap();
                assert_eq!(num_bigint::BigInt::from(c), dim_of(&mu));
                if !mu.is_hook() {
                    assert_eq!(character(&mu, &cyc).unwrap(), 0);
                }
            }
        }
    }

    #[test]
    fn theta_examples() {
        assert_eq!(theta(&p(&[4]), &p(&[4]), 4).unwrap(), 1);
        assert_eq!(theta(&p(&[2, 1]), &p(&[2, 1]), 1).unwrap(), 2);
        assert_eq!(theta(&p(&[2]), &p(&[1, 1]), 2).unwrap(), -1);
    }
}
