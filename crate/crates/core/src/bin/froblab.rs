fn main() {
    // CLI filled in once the library surface is complete.
}
