fn main() {
    println!("excheck");
}
