use std::ops::{Add, Mul};

use num_traits::Zero;
use permcore::ConjugacyData;
use posetcat::{fmt_q, qi, to_integer, Q};

/// A rational class function, one value per conjugacy class of a group in the
/// order of [`ConjugacyData`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    pub element_orders: Vec<u64>,
    pub centralizer_orders: Vec<u64>,
    pub class_sizes: Vec<u64>,
    pub values: Vec<Q>,
}

impl ClassFunction {
    pub fn new(classes: &ConjugacyData, values: Vec<Q>) -> Self {
        assert_eq!(values.len(), classes.len(), "one value per class");
        ClassFunction {
            element_orders: classes.element_orders.clone(),
            centralizer_orders: classes.centralizer_orders.clone(),
            class_sizes: classes.class_sizes.clone(),
            values,
        }
    }

    pub fn zero(classes: &ConjugacyData) -> Self {
        Self::new(classes, vec![Q::zero(); classes.len()])
    }

    /// The permutation character of the group acting on itself by
    /// conjugation, `x -> |C(x)|`.
    pub fn conjugation_character(classes: &ConjugacyData) -> Self {
        Self::new(classes, classes.centralizer_orders.iter().map(|&c| qi(c)).collect())
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn group_order(&self) -> u64 {
        self.class_sizes.iter().sum()
    }

    /// `<f, g> = sum over classes of f g / |C(x)|`. Values are rational, so
    /// no complex conjugation is needed.
    pub fn inner_product(&self, other: &ClassFunction) -> Q {
        assert_eq!(self.len(), other.len());
        self.values
            .iter()
            .zip(&other.values)
            .zip(&self.centralizer_orders)
            .map(|((a, b), &c)| a * b / qi(c))
            .sum()
    }

    /// `<f, |C|>`, the plain sum of the values over the classes.
    pub fn inner_product_with_conjugation_character(&self) -> Q {
        self.values.iter().sum()
    }

    pub fn is_integral(&self) -> bool {
        self.values.iter().all(|v| v.is_integer())
    }

    /// Whether the function vanishes on every class of elements of order
    /// divisible by p.
    pub fn vanishes_off_p_regular(&self, p: u64) -> bool {
        self.values.iter().zip(&self.element_orders).all(|(v, &o)| o % p != 0 || v.is_zero())
    }

    /// Values as integers, if they all are.
    pub fn integer_values(&self) -> Option<Vec<num_bigint::BigInt>> {
        self.values.iter().map(to_integer).collect()
    }

    /// Two tab-separated rows, element orders and values, each followed by
    /// the sum of the values.
    pub fn to_tsv(&self) -> String {
        let mut s = String::from("|x|");
        for o in &self.element_orders {
            s.push_str(&format!("\t{o}"));
        }
        s.push_str("\tsum\nvalue");
        for v in &self.values {
            s.push_str(&format!("\t{}", fmt_q(v)));
        }
        s.push_str(&format!("\t{}\n", fmt_q(&self.inner_product_with_conjugation_character())));
        s
    }
}

impl Add for &ClassFunction {
    type Output = ClassFunction;

    fn add(self, rhs: &ClassFunction) -> ClassFunction {
        assert_eq!(self.len(), rhs.len());
        ClassFunction { values: self.values.iter().zip(&rhs.values).map(|(a, b)| a + b).collect(), ..self.clone() }
    }
}

impl Mul<&Q> for &ClassFunction {
    type Output = ClassFunction;

    fn mul(self, k: &Q) -> ClassFunction {
        ClassFunction { values: self.values.iter().map(|a| a * k).collect(), ..self.clone() }
    }
}
