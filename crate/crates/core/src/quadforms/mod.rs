//! Binary quadratic forms over A = F_q[T] and class numbers of imaginary
//! quadratic A-orders.

pub mod classnum;
pub mod forms;
pub mod oracle;

pub use classnum::{
    chi, class_number_csv, class_number_table, h_maximal, h_maximal_within_bound, h_order,
    imaginary_squarefree, infinity_type, l_one, place_type, quad_symbol, ClassNumberRow,
    InfinityType, OrderInvariants,
};
pub use forms::{act, class_point_lognorm, enumerate_reduced, reduce, BinaryForm, Mat2};
pub use oracle::{class_count_oracle, ClassCount};
