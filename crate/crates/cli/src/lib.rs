pub mod placeholder { pub fn nothing() {} }
