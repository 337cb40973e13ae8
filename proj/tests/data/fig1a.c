TFStatus Eval(TfContext* context, TfNode* node){
  TfIntArray* output_shape=GetOutputShape(context, node);
  const int lookup_rank=NumDimensions(node);
  TF_LITE_ENSURE(context, lookup_rank > 0);
  int k=0;
  size_t embedding_size=1;
  size_t lookup_size=1;
  for(int i=0;i<lookup_rank-1;i++,k++)
  {
    const size_t dim=SizeOfDimension(node, i);
    lookup_size *= dim;
    output_shape->data[k]=dim;
  }
}
