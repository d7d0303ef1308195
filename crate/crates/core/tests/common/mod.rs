#![allow(dead_code)]

use inversion::{Basis, Circuit, FunctionSystem, Signal, TruthTable};
use rand::Rng;

pub fn table_from_bits(n: u32, bits: u64) -> TruthTable {
    TruthTable::from_index_fn(n, |i| (bits >> i) & 1 == 1)
}

pub fn random_table<R: Rng>(rng: &mut R, n: u32) -> TruthTable {
    TruthTable::from_index_fn(n, |_| rng.gen())
}

pub fn random_system<R: Rng>(rng: &mut R, n: u32, m: usize) -> FunctionSystem {
    FunctionSystem::new((0..m).map(|_| random_table(rng, n)).collect()).unwrap()
}

/// Upward closure of a random set: always monotone.
pub fn random_monotone<R: Rng>(rng: &mut R, n: u32) -> TruthTable {
    let seeds: Vec<usize> = (0..1usize << n).filter(|_| rng.gen_bool(0.2)).collect();
    TruthTable::from_index_fn(n, |p| seeds.iter().any(|&q| q & !p == 0))
}

pub fn random_nonmonotone<R: Rng>(rng: &mut R, n: u32) -> TruthTable {
    assert!(n >= 1);
    loop {
        let t = random_table(rng, n);
        if !t.is_monotone() {
            return t;
        }
    }
}

pub fn random_basis<R: Rng>(rng: &mut R) -> Basis {
    let p = rng.gen_range(1..=2);
    Basis::new(
        (0..p)
            .map(|_| {
                let a = rng.gen_range(1..=3);
                random_nonmonotone(rng, a)
            })
            .collect(),
    )
    .unwrap()
}

/// A random valid circuit over `basis` with `n` inputs.
pub fn random_circuit<R: Rng>(rng: &mut R, basis: &Basis, n: usize, gates: usize) -> Circuit {
    let mut c = Circuit::new(n);
    let pick = |rng: &mut R, c: &Circuit| -> Signal {
        let available = n + c.gates().len();
        if available == 0 || rng.gen_bool(0.05) {
            return Signal::Const(rng.gen());
        }
        let k = rng.gen_range(0..available);
        if k < n {
            Signal::Input(k)
        } else {
            Signal::Gate(k - n)
        }
    };
    for _ in 0..gates {
        if rng.gen_bool(0.45) {
            let i = rng.gen_range(0..basis.len());
            let a = basis.omegas()[i].arity() as usize;
            let args = (0..a).map(|_| pick(rng, &c)).collect();
            c.add_basis(i, args);
        } else {
            let a = rng.gen_range(0..=3u32);
            let table = random_monotone(rng, a);
            let args = (0..a).map(|_| pick(rng, &c)).collect();
            c.add_monotone(table, args);
        }
    }
    let outs = rng.gen_range(1..=3);
    let outputs = (0..outs).map(|_| pick(rng, &c)).collect();
    c.set_outputs(outputs);
    c
}

pub fn parity_plus_one() -> TruthTable {
    TruthTable::from_tuple_fn(3, |x| !(x[0] ^ x[1] ^ x[2]))
}

pub fn b2() -> Basis {
    Basis::new(vec![parity_plus_one()]).unwrap()
}

pub fn nand2() -> Basis {
    Basis::new(vec![TruthTable::from_bit_string("1110").unwrap()]).unwrap()
}

pub fn xor2() -> Basis {
    Basis::new(vec![TruthTable::from_bit_string("0110").unwrap()]).unwrap()
}

pub fn not_x_not_y() -> FunctionSystem {
    FunctionSystem::new(vec![
        TruthTable::from_tuple_fn(2, |x| !x[0]),
        TruthTable::from_tuple_fn(2, |x| !x[1]),
    ])
    .unwrap()
}

/// Every nonempty subset of the functions of arity `n`, members in table order.
pub fn all_systems(n: u32) -> impl Iterator<Item = FunctionSystem> {
    let count = 1u64 << (1u32 << n);
    (1u64..1 << count).map(move |mask| {
        FunctionSystem::new(
            (0..count)
                .filter(|f| (mask >> f) & 1 == 1)
                .map(|f| table_from_bits(n, f))
                .collect(),
        )
        .unwrap()
    })
}
