#include <cstdio>
int main(){ puts("qak"); }
